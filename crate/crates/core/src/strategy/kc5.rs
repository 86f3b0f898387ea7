use std::sync::atomic::{AtomicU64, Ordering};

use super::{Strategy, StrategyError, StrategyResult};
use crate::game::{ColorSet, GameState};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::structure::{chi_formula_kc5, cycle, recognize_expansion, ModuleFilter};

static LEDGER_CHECKS: AtomicU64 = AtomicU64::new(0);
static CASES: [AtomicU64; 3] = [AtomicU64::new(0), AtomicU64::new(0), AtomicU64::new(0)];

/// Number of ledger identities checked so far in this process.
pub fn ledger_checks() -> u64 {
    LEDGER_CHECKS.load(Ordering::Relaxed)
}

/// How often each stopping condition ended the `V_3` phase: all of `V_3`
/// colored, `|C_2| = |N_2|`, or `|C_4 ∪ C_5| = |N_4| + |N_5|`.
pub fn ledger_cases() -> [u64; 3] {
    CASES.each_ref().map(|c| c.load(Ordering::Relaxed))
}

fn count_case(i: usize) {
    CASES[i].fetch_add(1, Ordering::Relaxed);
}

fn count_check() {
    LEDGER_CHECKS.fetch_add(1, Ordering::Relaxed);
}

fn prev(i: usize) -> usize {
    if i == 1 {
        5
    } else {
        i - 1
    }
}

fn next(i: usize) -> usize {
    if i == 5 {
        1
    } else {
        i + 1
    }
}

/// Bookkeeping for `K[C5]` play, modules `V_1..V_5` (index 0 unused):
/// `N_i` are the uncolored vertices of `V_i` and `C_i` the colors still
/// legal for all of them (every uncolored vertex of a module has the same
/// closed neighborhood).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterLedger {
    pub n: [usize; 6],
    pub c: [ColorSet; 6],
}

impl CounterLedger {
    pub fn new(parts: &[VertexSet; 6], s: &GameState) -> Self {
        let mut n = [0; 6];
        let mut c = [ColorSet::EMPTY; 6];
        for i in 1..=5 {
            n[i] = (parts[i] - s.colored()).len();
            c[i] = s.palette().minus(s.colors_on(parts[prev(i)] | parts[i] | parts[next(i)]));
        }
        CounterLedger { n, c }
    }

    /// `|C_i| - |N_i|`.
    pub fn diff(&self, i: usize) -> isize {
        self.c[i].len() as isize - self.n[i] as isize
    }

    /// `|C_i ∪ C_{i+1}| - |N_i| - |N_{i+1}|`.
    pub fn union_diff(&self, i: usize) -> isize {
        let j = next(i);
        self.c[i].union(self.c[j]).len() as isize - self.n[i] as isize - self.n[j] as isize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Phase {
    V1,
    V3,
    Case1V2,
    Case1Pair,
    Case2V2,
    Case2V3,
    Case2Pair,
    Case3Pair45,
    Case3Pair23,
    Done,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tracked {
    Single(usize, isize),
    Union(usize, isize),
}

#[derive(Debug, Clone)]
enum Plan {
    /// Maximum clique `V_1 ∪ V_2` first, then `V_3 ∪ V_5`, then `V_4`.
    Clique(Vec<Vertex>),
    Ledger {
        phase: Phase,
        tracked: Vec<Tracked>,
    },
}

/// Strategy for complete expansions of C5.
#[derive(Debug, Clone)]
pub struct Kc5Strategy {
    parts: [VertexSet; 6],
    k: usize,
    n: usize,
    plan: Plan,
}

pub fn strat_kc5(g: &Graph, k: usize) -> StrategyResult {
    Ok(Box::new(Kc5Strategy::new(g, k)?))
}

impl Kc5Strategy {
    pub fn new(g: &Graph, k: usize) -> Result<Self, StrategyError> {
        let s = recognize_expansion(g, &cycle(5), ModuleFilter::Complete)
            .ok_or_else(|| StrategyError::NotApplicable("not a complete expansion of C5".into()))?;
        let m = s.sizes();
        let bound = chi_formula_kc5(&m).expect("five nonempty modules");
        if k < bound {
            return Err(StrategyError::BoundViolated { k, bound });
        }
        let omega = (0..5).map(|i| m[i] + m[(i + 1) % 5]).max().unwrap();
        let n = g.n();
        let relabel = |start: usize, step: usize| {
            let mut parts = [VertexSet::EMPTY; 6];
            for (j, part) in parts.iter_mut().enumerate().skip(1) {
                *part = s.modules[(start + step * (j - 1)) % 5];
            }
            parts
        };
        if 2 * omega >= n {
            let i = (0..5).find(|&i| m[i] + m[(i + 1) % 5] == omega).unwrap();
            let p = relabel(i, 1);
            let order = [p[1] | p[2], p[3] | p[5], p[4]].iter().flat_map(|s| s.iter()).collect();
            return Ok(Kc5Strategy { parts: p, k, n, plan: Plan::Clique(order) });
        }
        // dihedral relabeling with |V_3| >= |V_4| and least size tuple
        let parts = (0..5)
            .flat_map(|r| [1, 4].map(|step| relabel(r, step)))
            .filter(|p| p[3].len() >= p[4].len())
            .min_by_key(|p| p[1..].iter().map(|s| s.len()).collect::<Vec<_>>())
            .expect("a reflection always orders V_3, V_4");
        Ok(Kc5Strategy { parts, k, n, plan: Plan::Ledger { phase: Phase::V1, tracked: Vec::new() } })
    }

    /// Modules `V_1..V_5` after relabeling (index 0 unused).
    pub fn parts(&self) -> &[VertexSet; 6] {
        &self.parts
    }

    pub fn uses_ledger(&self) -> bool {
        matches!(self.plan, Plan::Ledger { .. })
    }

    fn first_open(&self, i: usize, s: &GameState) -> Option<Vertex> {
        (self.parts[i] - s.colored()).first()
    }

    fn starred(&self, ledger: &CounterLedger) -> Result<(), StrategyError> {
        let (k, v) = (self.k as isize, self.parts.map(|p| p.len() as isize));
        let expect = [
            ("|C2|-|N2|", ledger.diff(2), k - v[1] - v[2]),
            ("|C5|-|N5|", ledger.diff(5), k - v[1] - v[5]),
            ("|C3|-|N3|", ledger.diff(3), k - v[3]),
            ("|C4|-|N4|", ledger.diff(4), k - v[4]),
            ("|C2uC3|-|N2|-|N3|", ledger.union_diff(2), k - v[2] - v[3]),
            ("|C3uC4|-|N3|-|N4|", ledger.union_diff(3), k - v[3] - v[4]),
            ("|C4uC5|-|N4|-|N5|", ledger.union_diff(4), k - v[4] - v[5]),
        ];
        for (what, got, want) in expect {
            count_check();
            if got != want || got <= 0 {
                return Err(ledger_violation(format!("after V1: {what} = {got}, expected {want} > 0")));
            }
        }
        Ok(())
    }

    fn check_tracked(tracked: &[Tracked], ledger: &CounterLedger) -> Result<(), StrategyError> {
        for &t in tracked {
            count_check();
            let (what, before, now) = match t {
                Tracked::Single(i, v) => (format!("|C{i}|-|N{i}|"), v, ledger.diff(i)),
                Tracked::Union(i, v) => (format!("|C{i}uC{}|-|N{i}|-|N{}|", next(i), next(i)), v, ledger.union_diff(i)),
            };
            if before != now {
                return Err(ledger_violation(format!("{what} moved from {before} to {now} within its phase")));
            }
        }
        Ok(())
    }

    fn check_exact(&self, what: &str, got: isize) -> Result<(), StrategyError> {
        count_check();
        let want = 2 * self.k as isize - self.n as isize;
        if got != want {
            return Err(ledger_violation(format!("{what} = {got}, expected 2k - n = {want}")));
        }
        Ok(())
    }

    /// Whichever of `V_a`, `V_b` has the smaller `|C_i| - |N_i|` (ties to
    /// `V_a`), among those with uncolored vertices.
    fn pair_pick(&self, a: usize, ledger: &CounterLedger, s: &GameState) -> Option<(usize, Vertex)> {
        let b = next(a);
        let open: Vec<usize> = [a, b].into_iter().filter(|&i| ledger.n[i] > 0).collect();
        let i = *open.iter().min_by_key(|&&i| (ledger.diff(i), i != a))?;
        Some((i, self.first_open(i, s)?))
    }

    fn ledger_step(&mut self, s: &GameState) -> Result<Vertex, StrategyError> {
        let Plan::Ledger { phase, tracked } = &self.plan else { unreachable!() };
        let (mut phase, old) = (*phase, tracked.clone());
        let ledger = CounterLedger::new(&self.parts, s);
        Self::check_tracked(&old, &ledger)?;
        loop {
            let pick: Option<(Vertex, Vec<Tracked>)> = match phase {
                Phase::V1 => match self.first_open(1, s) {
                    Some(v) => Some((v, Vec::new())),
                    None => {
                        self.starred(&ledger)?;
                        phase = Phase::V3;
                        None
                    }
                },
                Phase::V3 => {
                    if ledger.n[3] == 0 {
                        count_case(0);
                        phase = Phase::Case1V2;
                    } else if ledger.diff(2) == 0 {
                        count_check();
                        let want = 2 * self.k as isize - self.n as isize;
                        if ledger.union_diff(4) < want {
                            return Err(ledger_violation(format!(
                                "case 2 opened with |C4uC5|-|N4|-|N5| = {} below 2k - n = {want}",
                                ledger.union_diff(4)
                            )));
                        }
                        count_case(1);
                        phase = Phase::Case2V2;
                    } else if ledger.union_diff(4) == 0 {
                        count_case(2);
                        phase = Phase::Case3Pair45;
                    }
                    if phase == Phase::V3 {
                        let v = self.first_open(3, s).unwrap();
                        Some((v, vec![Tracked::Single(3, ledger.diff(3))]))
                    } else {
                        None
                    }
                }
                Phase::Case1V2 | Phase::Case2V2 => match self.first_open(2, s) {
                    Some(v) => Some((v, vec![Tracked::Single(2, ledger.diff(2))])),
                    None => {
                        phase = if phase == Phase::Case1V2 { Phase::Case1Pair } else { Phase::Case2V3 };
                        None
                    }
                },
                Phase::Case2V3 => match self.first_open(3, s) {
                    Some(v) => Some((v, vec![Tracked::Single(3, ledger.diff(3))])),
                    None => {
                        self.check_exact("|C4uC5|-|N4|-|N5| after V3", ledger.union_diff(4))?;
                        phase = Phase::Case2Pair;
                        None
                    }
                },
                Phase::Case1Pair | Phase::Case2Pair | Phase::Case3Pair45 => match self.pair_pick(4, &ledger, s) {
                    Some((i, v)) => {
                        Some((v, vec![Tracked::Single(i, ledger.diff(i)), Tracked::Union(4, ledger.union_diff(4))]))
                    }
                    None if phase == Phase::Case3Pair45 => {
                        self.check_exact("|C2uC3|-|N2|-|N3| after V4 u V5", ledger.union_diff(2))?;
                        phase = Phase::Case3Pair23;
                        None
                    }
                    None => {
                        phase = Phase::Done;
                        None
                    }
                },
                Phase::Case3Pair23 => match self.pair_pick(2, &ledger, s) {
                    Some((i, v)) => {
                        Some((v, vec![Tracked::Single(i, ledger.diff(i)), Tracked::Union(2, ledger.union_diff(2))]))
                    }
                    None => {
                        phase = Phase::Done;
                        None
                    }
                },
                Phase::Done => return Err(StrategyError::Exhausted),
            };
            if let Some((v, tracked)) = pick {
                self.plan = Plan::Ledger { phase, tracked };
                return Ok(v);
            }
        }
    }
}

fn ledger_violation(msg: String) -> StrategyError {
    StrategyError::StructureViolation(format!("K[C5] ledger: {msg}"))
}

impl Strategy for Kc5Strategy {
    fn name(&self) -> &str {
        "kc5"
    }

    fn next_vertex(&mut self, s: &GameState) -> Result<Vertex, StrategyError> {
        match &self.plan {
            Plan::Clique(order) => {
                order.iter().copied().find(|&v| !s.colored().contains(v)).ok_or(StrategyError::Exhausted)
            }
            Plan::Ledger { .. } => self.ledger_step(s),
        }
    }

    fn clone_box(&self) -> Box<dyn Strategy> {
        Box::new(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_expr;

    #[test]
    fn branch_selection() {
        let g = parse_expr("K[C5](3,3,1,1,1)").unwrap();
        assert!(!Kc5Strategy::new(&g, 6).unwrap().uses_ledger());
        let g = parse_expr("K[C5](2,2,2,2,2)").unwrap();
        let s = Kc5Strategy::new(&g, 5).unwrap();
        assert!(s.uses_ledger());
        assert!(s.parts()[3].len() >= s.parts()[4].len());
        assert!(matches!(Kc5Strategy::new(&g, 4), Err(StrategyError::BoundViolated { k: 4, bound: 5 })));
    }

    #[test]
    fn starred_values_after_v1() {
        let g = parse_expr("K[C5](2,2,2,2,2)").unwrap();
        let mut st = Kc5Strategy::new(&g, 5).unwrap();
        let mut s = GameState::new(g, 5).unwrap();
        for c in [1, 2] {
            let v = st.next_vertex(&s).unwrap();
            assert!(st.parts()[1].contains(v));
            s.present(v).unwrap();
            s.color_pending(c).unwrap();
        }
        let v = st.next_vertex(&s).unwrap();
        assert!(st.parts()[3].contains(v));
        let ledger = CounterLedger::new(st.parts(), &s);
        assert_eq!((ledger.diff(2), ledger.diff(3), ledger.union_diff(4)), (1, 3, 1));
    }
}
