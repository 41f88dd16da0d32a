//! Drawing isomorphism, decided combinatorially: equal rotation systems,
//! matching per-component outer boundaries, and equal face containment.

use std::collections::BTreeSet;

use crate::drawing::PlanarDrawing;
use crate::embedding::{derive_embedding, embed_unchecked, Embedding};
use crate::error::{Error, Result};

/// True iff the two drawings of the same labelled graph can be continuously
/// deformed into each other while staying planar.
pub fn drawings_isomorphic(d1: &PlanarDrawing, d2: &PlanarDrawing) -> Result<bool> {
    let e1 = derive_embedding(d1)?;
    let e2 = derive_embedding(d2)?;
    Ok(isomorphism_report(d1, &e1, d2, &e2).is_ok())
}

/// Like [`drawings_isomorphic`] but with a message naming the first
/// combinatorial discrepancy. Skips re-validation of the drawings.
pub fn check_isomorphic(d1: &PlanarDrawing, d2: &PlanarDrawing) -> Result<()> {
    let e1 = embed_unchecked(d1);
    let e2 = embed_unchecked(d2);
    isomorphism_report(d1, &e1, d2, &e2).map_err(Error::NotIsomorphic)
}

fn isomorphism_report(
    d1: &PlanarDrawing,
    e1: &Embedding,
    d2: &PlanarDrawing,
    e2: &Embedding,
) -> std::result::Result<(), String> {
    let g1 = d1.graph();
    let g2 = d2.graph();
    if g1.vertices().collect::<Vec<_>>() != g2.vertices().collect::<Vec<_>>()
        || g1.edges().collect::<Vec<_>>() != g2.edges().collect::<Vec<_>>()
    {
        return Err("drawings are of different labelled graphs".into());
    }

    // Rotation systems must agree as cyclic orders at every vertex.
    for v in g1.vertices() {
        if !cyclic_equal(e1.rotation(v), e2.rotation(v)) {
            return Err(format!(
                "rotation mismatch at vertex {v}: {:?} vs {:?}",
                e1.rotation(v),
                e2.rotation(v)
            ));
        }
    }

    // With equal rotations the dart walks coincide; what remains geometric
    // is which walk bounds each component from outside and which components
    // live in which face.
    for comp in 0..g1.component_count() {
        let w1 = e1.outer_walk_of_component(comp).map(|i| &e1.walks()[i].darts);
        let w2 = e2.outer_walk_of_component(comp).map(|i| &e2.walks()[i].darts);
        if w1 != w2 {
            let rep = g1.components()[comp][0];
            return Err(format!(
                "outer boundary of the component of vertex {rep} differs (a component is turned inside out)"
            ));
        }
    }

    // Face containment: faces are identified by the canonical dart sequence
    // of their bounding walk; the unbounded faces correspond by definition.
    let key = |e: &Embedding, face: &crate::embedding::Face| -> Option<Vec<(u32, u32)>> {
        face.boundary_walk.map(|w| e.walks()[w].darts.clone())
    };
    let collect = |d: &PlanarDrawing, e: &Embedding| -> Vec<(Option<Vec<(u32, u32)>>, BTreeSet<u32>)> {
        let mut items: Vec<_> = e
            .faces()
            .iter()
            .map(|f| {
                let members: BTreeSet<u32> = f
                    .contained
                    .iter()
                    .map(|&c| d.graph().components()[c][0])
                    .collect();
                (key(e, f), members)
            })
            .collect();
        items.sort();
        items
    };
    let f1 = collect(d1, e1);
    let f2 = collect(d2, e2);
    if f1 != f2 {
        for (a, b) in f1.iter().zip(f2.iter()) {
            if a != b {
                return Err(format!(
                    "face containment differs: face {:?} holds components of {:?} vs {:?}",
                    a.0.as_ref().map(|k| k.first().copied()),
                    a.1,
                    b.1
                ));
            }
        }
        return Err("face containment differs".into());
    }
    Ok(())
}

fn cyclic_equal(a: &[u32], b: &[u32]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let Some(shift) = b.iter().position(|&x| x == a[0]) else {
        return false;
    };
    (0..a.len()).all(|i| a[i] == b[(shift + i) % b.len()])
}
