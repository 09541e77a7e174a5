use serde_json::{json, Value};

use super::fixtures::label;
use crate::lattice::{ElementId, Lattice};
use crate::preorder::{extend_to_total_preorder, strict_top_betweenness};
use crate::verify::VerificationReport;

fn named(l: &Lattice, xs: &[ElementId]) -> Value {
    json!(xs.iter().map(|&x| l.name(x)).collect::<Vec<_>>())
}

fn first<const K: usize>(l: &Lattice, mut bad: impl FnMut([ElementId; K]) -> bool) -> Option<Value> {
    let m = l.size();
    let total = m.pow(K as u32);
    (0..total).find_map(|mut t| {
        let mut xs = [ElementId::new(0); K];
        for x in xs.iter_mut().rev() {
            *x = ElementId::new(t % m);
            t /= m;
        }
        bad(xs).then(|| named(l, &xs))
    })
}

/// Betweenness axioms, median axioms, the median description of betweenness
/// and the metric description under the rank valuation.
pub fn claim1(l: &Lattice) -> VerificationReport {
    let mut r = VerificationReport::new(format!("claim1 {}", label(l)));
    let b = |x, z, y| l.between(x, z, y);
    r.check("betweenness symmetry", first(l, |[x, z, y]| b(x, z, y) && !b(y, z, x)));
    r.check("betweenness closure", first(l, |[x, y]| !b(x, x, y) || !b(x, y, y)));
    r.check("betweenness idempotence", first(l, |[x, y]| b(x, y, x) && y != x));
    r.check(
        "betweenness convexity",
        first(l, |[x, y, z, u, v]| b(x, u, y) && b(x, v, y) && b(u, z, v) && !b(x, z, y)),
    );
    r.check("betweenness antisymmetry", first(l, |[x, y, z]| b(x, y, z) && b(y, x, z) && x != y));

    let mu = |a, b, c| l.median(a, b, c);
    let (bot, top) = (l.bottom(), l.top());
    r.check("median with both bounds is the identity", first(l, |[a]| mu(bot, a, top) != a));
    r.check("median majority law", first(l, |[a, b]| mu(a, b, a) != a));
    r.check(
        "median symmetry",
        first(l, |[a, b, c]| mu(a, b, c) != mu(b, a, c) || mu(a, b, c) != mu(b, c, a)),
    );
    r.check(
        "median five-point distributive law",
        first(l, |[a, b, c, d, e]| mu(mu(a, b, c), d, e) != mu(mu(a, d, e), b, mu(c, d, e))),
    );
    r.check(
        "median betweenness equals lattice betweenness",
        first(l, |[x, z, y]| b(x, z, y) != (mu(x, y, z) == z)),
    );
    r.check(
        "join and meet as medians with the bounds",
        first(l, |[a, b]| l.join(a, b) != mu(a, b, top) || l.meet(a, b) != mu(a, b, bot)),
    );

    let v = l.rank_valuation();
    r.check(
        "rank valuation is a positive valuation",
        first(l, |[x, y]| {
            v.get(l.join(x, y)) + v.get(l.meet(x, y)) != v.get(x) + v.get(y) || (l.lt(x, y) && v.get(x) >= v.get(y))
        }),
    );
    let d = |x, y| l.metric_distance(&v, x, y);
    r.check(
        "metric betweenness equals lattice betweenness",
        first(l, |[x, y, z]| b(x, y, z) != (d(x, z) == d(x, y) + d(y, z))),
    );
    r.finish()
}

/// For every peak: the strict relation it induces is consistent and its
/// layered extension is a locally strictly unimodal preorder with that top.
pub fn claim2(l: &Lattice) -> VerificationReport {
    let mut r = VerificationReport::new(format!("claim2 {}", label(l)));
    let mut inconsistent = None;
    let mut bad_extension = None;
    for x in l.elements() {
        let rel = strict_top_betweenness(l, x);
        if !rel.is_s_consistent() || !rel.is_asymmetric() {
            inconsistent.get_or_insert_with(|| json!({ "peak": l.name(x) }));
            continue;
        }
        let ext = extend_to_total_preorder(&rel).expect("consistent relations extend");
        let extends = rel.pairs().all(|(a, b)| ext.prefers(a, b));
        let lsu = ext.is_locally_strictly_unimodal(l).unwrap_or(false);
        if !extends || !lsu || ext.top() != x {
            bad_extension.get_or_insert_with(|| {
                json!({ "peak": l.name(x), "extension": ext.named_classes(l), "extends": extends, "lsu": lsu })
            });
        }
    }
    r.check("strict betweenness relation is consistent for every peak", inconsistent);
    r.check("its extension is locally strictly unimodal with the peak on top", bad_extension);
    r.finish()
}
