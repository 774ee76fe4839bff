use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::{corpus, Expectation, Observation, Report, TheoremCheck, TheoremId, Verdict};
use crate::convexity::Distance;
use crate::family::FamilySpec;
use crate::graph::Graph;
use crate::solver::{
    all_minimum_hull_sets, forced_pairs_prism, hull_number, hull_number_prism, SearchConfig,
};
use crate::vertex_set::VertexSet;
use crate::SolverError;

/// Largest graph whose minimum hull sets are all enumerated for the
/// simplicial-vertex lemma.
pub const LEMMA1_MAX_VERTICES: usize = 8;
/// Largest base graph whose prism is enumerated for the simplicial-pair lemma.
pub const LEMMA2_MAX_BASE: usize = 6;

fn prism_name(spec: &FamilySpec) -> String {
    format!("prism({spec})")
}

/// Runs checks with one solver configuration. Instances run concurrently;
/// results always come back in input order.
#[derive(Debug, Clone, Default)]
pub struct Harness {
    cfg: SearchConfig,
}

/// Components of a graph split by size.
struct Split {
    nontrivial: Vec<VertexSet>,
    trivial: usize,
}

fn split_components(g: &Graph) -> Split {
    let (nontrivial, trivial): (Vec<_>, Vec<_>) =
        g.components().into_iter().partition(|c| c.len() > 1);
    Split {
        nontrivial,
        trivial: trivial.len(),
    }
}

fn diam_text(d: Distance) -> String {
    d.to_string()
}

impl Harness {
    pub fn new(cfg: SearchConfig) -> Self {
        Self { cfg }
    }

    pub fn config(&self) -> &SearchConfig {
        &self.cfg
    }

    fn refused(theorem: TheoremId, instance: String, e: SolverError) -> TheoremCheck {
        TheoremCheck::unjudged(
            theorem,
            instance,
            Verdict::Invalid,
            None,
            format!("refused:{e}").replace(' ', "_"),
        )
    }

    fn equality(
        &self,
        theorem: TheoremId,
        spec: &FamilySpec,
        expected: usize,
        detail: String,
    ) -> TheoremCheck {
        let instance = prism_name(spec);
        let g = match spec.generate() {
            Ok(g) => g,
            Err(e) => {
                return TheoremCheck::unjudged(
                    theorem,
                    instance,
                    Verdict::Invalid,
                    None,
                    e.to_string().replace(' ', "_"),
                )
            }
        };
        match hull_number_prism(&g, &self.cfg) {
            Ok(r) => TheoremCheck::judged(
                theorem,
                instance,
                Expectation::Equal(expected),
                Observation::Hull(r),
                detail,
            ),
            Err(e) => Self::refused(theorem, instance, e),
        }
    }

    /// Prisms of complete graphs, paths and cycles for every `n` in range
    /// where the family exists.
    pub fn check_duarte(&self, range: RangeInclusive<usize>) -> Vec<TheoremCheck> {
        let mut jobs = Vec::new();
        for n in range.clone().filter(|&n| n >= 2) {
            jobs.push((TheoremId::T2_1, FamilySpec::Complete(n), n));
        }
        for n in range.clone().filter(|&n| n >= 1) {
            jobs.push((
                TheoremId::T2_2,
                FamilySpec::Path(n),
                if n == 3 { 3 } else { 2 },
            ));
        }
        for n in range.filter(|&n| n >= 3) {
            jobs.push((
                TheoremId::T2_3,
                FamilySpec::Cycle(n),
                if n >= 6 { 2 } else { 3 },
            ));
        }
        jobs.par_iter()
            .map(|(id, spec, expected)| {
                self.equality(*id, spec, *expected, format!("n={}", spec_size(spec)))
            })
            .collect()
    }

    /// Stars with at least 3 leaves expect `leaves + 1`; other trees with
    /// at least 5 vertices expect 2. Smaller non-star trees fall outside the
    /// hypothesis and get no formula.
    pub fn check_trees(&self, specs: &[FamilySpec]) -> Vec<TheoremCheck> {
        specs.par_iter().map(|spec| self.check_tree(spec)).collect()
    }

    fn check_tree(&self, spec: &FamilySpec) -> TheoremCheck {
        let id = TheoremId::T3;
        let instance = prism_name(spec);
        let g = match spec.generate() {
            Ok(g) if g.is_tree() => g,
            Ok(_) => {
                return TheoremCheck::unjudged(
                    id,
                    instance,
                    Verdict::Invalid,
                    None,
                    "not_a_tree".into(),
                )
            }
            Err(e) => {
                return TheoremCheck::unjudged(
                    id,
                    instance,
                    Verdict::Invalid,
                    None,
                    e.to_string().replace(' ', "_"),
                )
            }
        };
        let n = g.order();
        let star = n >= 3 && (0..n).any(|v| g.degree(v) == n - 1);
        let detail = format!("vertices={n},star={star}");
        let report = match hull_number_prism(&g, &self.cfg) {
            Ok(r) => r,
            Err(e) => return Self::refused(id, instance, e),
        };
        let expected = if star && n >= 4 {
            Some(n)
        } else if !star && n >= 5 {
            Some(2)
        } else {
            None
        };
        match expected {
            Some(e) => TheoremCheck::judged(
                id,
                instance,
                Expectation::Equal(e),
                Observation::Hull(report),
                detail,
            ),
            None => TheoremCheck::unjudged(
                id,
                instance,
                Verdict::NotApplicable,
                Some(Observation::Hull(report)),
                detail,
            ),
        }
    }

    /// Disconnected graphs. At least two nontrivial components: exact
    /// value, one more than the number of components. Exactly one
    /// nontrivial component `G1` plus `t > 0` isolated vertices: the lower
    /// bound, the diameter-dependent upper bounds, the bound through the
    /// complement of `G1`, and their corollaries, each where its
    /// hypothesis holds.
    pub fn check_disconnected(&self, specs: &[FamilySpec]) -> Vec<TheoremCheck> {
        specs
            .par_iter()
            .map(|spec| self.check_disconnected_one(spec))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    }

    fn check_disconnected_one(&self, spec: &FamilySpec) -> Vec<TheoremCheck> {
        let instance = prism_name(spec);
        let g = match spec.generate() {
            Ok(g) => g,
            Err(e) => {
                return vec![TheoremCheck::unjudged(
                    TheoremId::T4,
                    instance,
                    Verdict::Invalid,
                    None,
                    e.to_string().replace(' ', "_"),
                )]
            }
        };
        let split = split_components(&g);
        let components = split.nontrivial.len() + split.trivial;
        let t = split.trivial;
        let report = match hull_number_prism(&g, &self.cfg) {
            Ok(r) => r,
            Err(e) => return vec![Self::refused(TheoremId::T4, instance, e)],
        };
        let observed = || Observation::Hull(report.clone());

        if split.nontrivial.len() >= 2 {
            let detail = format!(
                "components={components},nontrivial={},trivial={t}",
                split.nontrivial.len()
            );
            return vec![TheoremCheck::judged(
                TheoremId::T4,
                instance,
                Expectation::Equal(components + 1),
                observed(),
                detail,
            )];
        }
        if split.nontrivial.len() != 1 || t == 0 {
            let detail = format!(
                "components={components},nontrivial={},trivial={t}",
                split.nontrivial.len()
            );
            return vec![TheoremCheck::unjudged(
                TheoremId::T4,
                instance,
                Verdict::NotApplicable,
                Some(observed()),
                detail,
            )];
        }

        let (g1, _) = g.induced_subgraph(&split.nontrivial[0]);
        let g1c = g1.complement();
        let d1 = g1.diameter();
        let d1c = g1c.diameter();
        let h1 = match hull_number(&g1, &self.cfg) {
            Ok(r) => r.hull_number,
            Err(e) => return vec![Self::refused(TheoremId::T5, instance, e)],
        };
        let h1c = if d1c <= Distance::Finite(2) {
            match hull_number(&g1c, &self.cfg) {
                Ok(r) => Some(r.hull_number),
                Err(e) => return vec![Self::refused(TheoremId::T7, instance, e)],
            }
        } else {
            None
        };
        let mut detail = format!(
            "trivial={t},diam_g1={},diam_g1c={},h_g1={h1}",
            diam_text(d1),
            diam_text(d1c)
        );
        if let Some(h) = h1c {
            detail.push_str(&format!(",h_g1c={h}"));
        }

        let mut out = Vec::new();
        let mut push = |id: TheoremId, e: Expectation| {
            out.push(TheoremCheck::judged(
                id,
                instance.clone(),
                e,
                observed(),
                detail.clone(),
            ));
        };
        push(TheoremId::T5, Expectation::AtLeast(t + 2));
        if d1 <= Distance::Finite(3) {
            push(TheoremId::T6a, Expectation::AtMost(h1 + t));
        } else {
            push(TheoremId::T6b, Expectation::AtMost(t + 2));
            push(TheoremId::C1, Expectation::Equal(t + 2));
        }
        if let Some(hc) = h1c {
            push(TheoremId::T7, Expectation::AtMost(hc + t));
            if d1 <= Distance::Finite(3) {
                push(TheoremId::C2, Expectation::AtMost(h1.min(hc) + t));
            }
        }
        out
    }

    /// Connected cographs, classified by the components of the complement:
    /// `k` nontrivial and `t` trivial ones.
    pub fn check_cographs(&self, specs: &[FamilySpec]) -> Vec<TheoremCheck> {
        specs
            .par_iter()
            .map(|spec| self.check_cograph(spec))
            .collect()
    }

    fn check_cograph(&self, spec: &FamilySpec) -> TheoremCheck {
        let instance = prism_name(spec);
        let invalid = |id, why: String| {
            TheoremCheck::unjudged(id, instance.clone(), Verdict::Invalid, None, why)
        };
        let g = match spec.generate() {
            Ok(g) => g,
            Err(e) => return invalid(TheoremId::T8i, e.to_string().replace(' ', "_")),
        };
        if g.order() == 0 || !g.is_connected() {
            return invalid(TheoremId::T8i, "disconnected".into());
        }
        if !g.is_cograph() {
            return invalid(TheoremId::T8i, "not_a_cograph".into());
        }
        let gc = g.complement();
        let split = split_components(&gc);
        let (k, t) = (split.nontrivial.len(), split.trivial);
        let detail = format!("k={k},t={t}");
        let id = match k {
            0 => TheoremId::T8i,
            1 => TheoremId::T8ii,
            _ => TheoremId::T8iii,
        };
        let report = match hull_number_prism(&g, &self.cfg) {
            Ok(r) => r,
            Err(e) => return Self::refused(id, instance, e),
        };
        let observed = Observation::Hull(report);
        match k {
            // K_1: its prism is K_2, outside the complete-graph result.
            0 if t < 2 => {
                TheoremCheck::unjudged(id, instance, Verdict::NotApplicable, Some(observed), detail)
            }
            0 => TheoremCheck::judged(id, instance, Expectation::Equal(t), observed, detail),
            // A connected cograph always has a disconnected complement.
            1 if t == 0 => TheoremCheck::unjudged(
                id,
                instance,
                Verdict::Fail,
                Some(observed),
                format!("{detail},complement_connected"),
            ),
            1 => {
                let comp = &split.nontrivial[0];
                let (g1, _) = g.induced_subgraph(comp);
                let (g1c, _) = gc.induced_subgraph(comp);
                let bounds = hull_number(&g1, &self.cfg)
                    .and_then(|a| Ok((a, hull_number(&g1c, &self.cfg)?)));
                match bounds {
                    Ok((a, b)) => {
                        let upper = a.hull_number.min(b.hull_number) + t;
                        let detail =
                            format!("{detail},h_g1={},h_g1c={}", a.hull_number, b.hull_number);
                        TheoremCheck::judged(
                            id,
                            instance,
                            Expectation::Between(t + 2, upper),
                            observed,
                            detail,
                        )
                    }
                    Err(e) => Self::refused(id, instance, e),
                }
            }
            _ => TheoremCheck::judged(
                id,
                instance,
                Expectation::Equal(k + t + 1),
                observed,
                detail,
            ),
        }
    }

    /// `P_4` for `n = 2`, the pendant-clique gadget for larger `n`; both the
    /// graph and its complement must be connected.
    pub fn check_unbounded(&self, range: RangeInclusive<usize>) -> Vec<TheoremCheck> {
        let specs: Vec<(usize, FamilySpec)> = range
            .filter(|&n| n >= 2)
            .map(|n| {
                (
                    n,
                    if n == 2 {
                        FamilySpec::Path(4)
                    } else {
                        FamilySpec::Theorem9(n)
                    },
                )
            })
            .collect();
        specs
            .par_iter()
            .map(|(n, spec)| {
                let g = spec.generate().expect("valid gadget");
                let connected = g.is_connected() && g.complement().is_connected();
                if !connected {
                    return TheoremCheck::unjudged(
                        TheoremId::T9,
                        prism_name(spec),
                        Verdict::Invalid,
                        None,
                        "graph_or_complement_disconnected".into(),
                    );
                }
                self.equality(
                    TheoremId::T9,
                    spec,
                    *n,
                    "g_connected,complement_connected".into(),
                )
            })
            .collect()
    }

    /// Enumerates every minimum hull set and counts those that miss a
    /// simplicial vertex (graphs up to 8 vertices) or miss a simplicial
    /// pair of the prism (base graphs up to 6 vertices).
    pub fn check_lemmas(&self, corpus: &[FamilySpec]) -> Vec<TheoremCheck> {
        let l1: Vec<TheoremCheck> = corpus.par_iter().map(check_lemma1).collect();
        let l2: Vec<TheoremCheck> = corpus
            .par_iter()
            .filter_map(|spec| {
                let g = spec.generate().ok()?;
                (g.order() <= LEMMA2_MAX_BASE).then(|| check_lemma2(spec, &g))
            })
            .collect();
        l1.into_iter().chain(l2).collect()
    }

    /// Every group of checks that can produce `filter` (all groups when
    /// `None`) over the default instances. `range` overrides the parameter
    /// range of the range-driven groups.
    pub fn suite(&self, filter: Option<TheoremId>, range: Option<RangeInclusive<usize>>) -> Report {
        use TheoremId::*;
        let wants = |ids: &[TheoremId]| filter.is_none_or(|f| ids.contains(&f));
        let mut checks = Vec::new();
        if wants(&[T2_1, T2_2, T2_3]) {
            checks.extend(self.check_duarte(range.clone().unwrap_or(corpus::DUARTE_RANGE)));
        }
        if wants(&[T3]) {
            checks.extend(self.check_trees(&corpus::tree_specs()));
        }
        if wants(&[T4, T5, T6a, T6b, T7, C1, C2]) {
            checks.extend(self.check_disconnected(&corpus::disconnected_specs()));
        }
        if wants(&[T8i, T8ii, T8iii]) {
            checks.extend(self.check_cographs(&corpus::cograph_specs()));
        }
        if wants(&[T9]) {
            checks.extend(self.check_unbounded(range.clone().unwrap_or(corpus::UNBOUNDED_RANGE)));
        }
        if wants(&[L1, L2]) {
            checks.extend(self.check_lemmas(&corpus::lemma_corpus()));
        }
        if let Some(f) = filter {
            checks.retain(|c| c.theorem == f);
        }
        Report { checks }
    }
}

fn spec_size(spec: &FamilySpec) -> usize {
    match spec {
        FamilySpec::Complete(n) | FamilySpec::Path(n) | FamilySpec::Cycle(n) => *n,
        _ => 0,
    }
}

fn check_lemma1(spec: &FamilySpec) -> TheoremCheck {
    let id = TheoremId::L1;
    let name = spec.to_string();
    let g = match spec.generate() {
        Ok(g) => g,
        Err(e) => {
            return TheoremCheck::unjudged(
                id,
                name,
                Verdict::Invalid,
                None,
                e.to_string().replace(' ', "_"),
            )
        }
    };
    if g.order() > LEMMA1_MAX_VERTICES {
        return TheoremCheck::unjudged(
            id,
            name,
            Verdict::NotApplicable,
            None,
            "too_large_to_enumerate".into(),
        );
    }
    let simplicial = g.simplicial_vertices();
    let (h, sets) = all_minimum_hull_sets(&g);
    let violations = sets.iter().filter(|s| !simplicial.is_subset(s)).count();
    TheoremCheck::judged(
        id,
        name,
        Expectation::NoViolations,
        Observation::Lemma {
            hull_number: h,
            minimum_sets: sets.len(),
            violations,
        },
        format!("simplicial={simplicial}"),
    )
}

fn check_lemma2(spec: &FamilySpec, g: &Graph) -> TheoremCheck {
    let pairs = forced_pairs_prism(g);
    let (h, sets) = all_minimum_hull_sets(&g.complementary_prism());
    let violations = sets
        .iter()
        .filter(|s| pairs.iter().any(|&(a, b)| !s.contains(a) && !s.contains(b)))
        .count();
    let pair_text: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
    TheoremCheck::judged(
        TheoremId::L2,
        prism_name(spec),
        Expectation::NoViolations,
        Observation::Lemma {
            hull_number: h,
            minimum_sets: sets.len(),
            violations,
        },
        format!(
            "pairs={}",
            if pair_text.is_empty() {
                "none".into()
            } else {
                pair_text.join("/")
            }
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::HullReport;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    fn observed_report(check: &TheoremCheck) -> Option<&HullReport> {
        match &check.observed {
            Some(Observation::Hull(r)) => Some(r),
            _ => None,
        }
    }

    fn expected_and_verdict(c: &TheoremCheck) -> (Option<Expectation>, Verdict) {
        (c.expected, c.verdict)
    }

    #[test]
    fn duarte_examples() {
        let checks = Harness::default().check_duarte(3..=5);
        let find = |id, inst: &str| {
            checks
                .iter()
                .find(|c| c.theorem == id && c.instance == inst)
                .unwrap()
        };
        assert_eq!(
            expected_and_verdict(find(TheoremId::T2_1, "prism(complete:5)")),
            (Some(Expectation::Equal(5)), Verdict::Pass)
        );
        assert_eq!(
            expected_and_verdict(find(TheoremId::T2_2, "prism(path:3)")),
            (Some(Expectation::Equal(3)), Verdict::Pass)
        );
        assert_eq!(
            expected_and_verdict(find(TheoremId::T2_3, "prism(cycle:5)")),
            (Some(Expectation::Equal(3)), Verdict::Pass)
        );
        assert_eq!(checks.len(), 9);
    }

    #[test]
    fn tree_examples() {
        let checks = Harness::default().check_trees(&[
            spec("star:4"),
            spec("edges:6:0-1/1-2/2-3/1-4/2-5"),
            spec("tree:7:seed=1"),
            spec("path:4"),
            spec("cycle:4"),
        ]);
        assert_eq!(checks[0].expected, Some(Expectation::Equal(5)));
        assert_eq!(checks[1].expected, Some(Expectation::Equal(2)));
        assert!(checks[..3].iter().all(|c| c.verdict == Verdict::Pass));
        assert_eq!(checks[3].verdict, Verdict::NotApplicable);
        assert_eq!(checks[4].verdict, Verdict::Invalid);
    }

    #[test]
    fn disconnected_examples() {
        let h = Harness::default();
        let c = h.check_disconnected(&[spec("union(complete:2,complete:2,complete:1)")]);
        assert_eq!(c.len(), 1);
        assert_eq!(
            (c[0].theorem, c[0].expected, c[0].verdict),
            (TheoremId::T4, Some(Expectation::Equal(4)), Verdict::Pass)
        );

        let c = h.check_disconnected(&[spec("union(path:5,complete:1)")]);
        let c1 = c.iter().find(|c| c.theorem == TheoremId::C1).unwrap();
        assert_eq!(
            (c1.expected, c1.verdict),
            (Some(Expectation::Equal(3)), Verdict::Pass)
        );
        assert!(c.iter().all(|c| c.verdict == Verdict::Pass));

        let c = h.check_disconnected(&[spec("union(path:4,complete:1,complete:1)")]);
        let t5 = c.iter().find(|c| c.theorem == TheoremId::T5).unwrap();
        let t6 = c.iter().find(|c| c.theorem == TheoremId::T6a).unwrap();
        assert_eq!(t5.expected, Some(Expectation::AtLeast(4)));
        assert_eq!(t6.expected, Some(Expectation::AtMost(4)));
        assert_eq!((t5.slack, t6.slack), (Some(0), Some(0)));

        let c = h.check_disconnected(&[spec("path:4")]);
        assert_eq!(c[0].verdict, Verdict::NotApplicable);
    }

    #[test]
    fn cograph_examples() {
        let h = Harness::default();
        let c = h.check_cographs(&[
            spec("complete:4"),
            spec("join(union(complete:1,complete:1),union(complete:1,complete:1),complete:1)"),
            spec("star:3"),
            spec("path:4"),
            spec("union(complete:1,complete:1)"),
            spec("complete:1"),
        ]);
        assert_eq!(
            (c[0].theorem, c[0].expected, c[0].verdict),
            (TheoremId::T8i, Some(Expectation::Equal(4)), Verdict::Pass)
        );
        assert_eq!(c[1].theorem, TheoremId::T8iii);
        assert_eq!(c[1].detail, "k=2,t=1");
        assert_eq!(
            (c[1].expected, c[1].verdict),
            (Some(Expectation::Equal(4)), Verdict::Pass)
        );
        assert_eq!(
            (c[2].theorem, c[2].expected, c[2].verdict),
            (
                TheoremId::T8ii,
                Some(Expectation::Between(3, 4)),
                Verdict::Pass
            )
        );
        assert_eq!(observed_report(&c[2]).unwrap().hull_number, 4);
        assert_eq!(c[3].verdict, Verdict::Invalid);
        assert_eq!(c[4].verdict, Verdict::Invalid);
        assert_eq!(c[5].verdict, Verdict::NotApplicable);
    }

    #[test]
    fn unbounded_examples() {
        let c = Harness::default().check_unbounded(2..=4);
        assert_eq!(c.len(), 3);
        assert_eq!(c[0].instance, "prism(path:4)");
        assert!(c.iter().all(|c| c.verdict == Verdict::Pass));
    }

    #[test]
    fn lemma_examples() {
        let c =
            Harness::default().check_lemmas(&[spec("path:4"), spec("cycle:5"), spec("complete:3")]);
        assert_eq!(c.len(), 6);
        assert!(c.iter().all(|c| c.verdict == Verdict::Pass));
        assert_eq!(c[0].to_string(), "L1 path:4 expected=violations:0 observed=violations:0/sets:1/h:2 verdict=pass slack=- detail=simplicial={0,3}");
        assert_eq!(c[5].detail, "pairs=0-3/1-4/2-5");
    }
}
