//! Canonical certificates: equal iff the diagrams are isomorphic by a flag
//! bijection that fixes every leaf flag.
//!
//! Fixing leaf flags (rather than just leaf labels) keeps mirror images
//! apart. Mirror images with the same marking are different sets of
//! trajectories: the marking of a stored diagram is pinned by the convention
//! that each component is solid on the `+` side of its smallest leaf.

use std::collections::VecDeque;

use super::RibbonDiagram;

/// Components are numbered breadth-first from the `+` flag of their smallest
/// leaf, then concatenated in the order of those leaves. Leafless components
/// (never valid) fall back to the least code over all starting flags.
pub fn certificate(d: &RibbonDiagram) -> Vec<u32> {
    let nflags = 2 * d.dart_count();
    let mut done = vec![false; nflags];
    let mut out = vec![d.t()];
    // Positions follow the label order, so scanning them meets components by
    // their smallest leaf.
    for p in 0..d.leaf_count() {
        if done[2 * p] {
            continue;
        }
        let mut mark = Some(&mut done);
        let c = code(d, 2 * p, &mut mark);
        out.push(u32::MAX);
        out.extend(c);
    }
    let mut remaining: Vec<usize> = (0..nflags).filter(|&f| !done[f]).collect();
    while let Some(&f0) = remaining.first() {
        let best = remaining.iter().map(|&s| code(d, s, &mut None)).min().expect("nonempty");
        let mut mark = Some(&mut done);
        code(d, f0, &mut mark);
        out.push(u32::MAX - 1);
        out.extend(best);
        remaining.retain(|&f| !done[f]);
    }
    out
}

fn code(d: &RibbonDiagram, start: usize, mark: &mut Option<&mut Vec<bool>>) -> Vec<u32> {
    let nflags = 2 * d.dart_count();
    let mut num = vec![u32::MAX; nflags];
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    num[start] = 0;
    queue.push_back(start);
    while let Some(f) = queue.pop_front() {
        order.push(f);
        for g in [d.corner(f), d.edge_side(f), f ^ 1] {
            if num[g] == u32::MAX {
                num[g] = order.len() as u32 + queue.len() as u32;
                queue.push_back(g);
            }
        }
    }
    if let Some(m) = mark.as_deref_mut() {
        for &f in &order {
            m[f] = true;
        }
    }
    let mut out = Vec::with_capacity(order.len() * 4);
    for &f in &order {
        let dart = f >> 1;
        let leaf = if d.is_leaf_dart(dart) { d.leaf_label(dart).to_signed() as i32 as u32 } else { 0 };
        out.extend([num[d.corner(f)], num[d.edge_side(f)], num[f ^ 1], leaf]);
    }
    out
}
