use std::fmt;
use std::str::FromStr;

use super::{Record, StrategyOutcome, VerifyError};
use crate::game::{
    chi_exact, chi_i_with, omega_exact, play_match_with, BenPolicy, GameError, Outcome, SolverConfig, MAX_COLORS,
};
use crate::graph::{degeneracy, Graph};
use crate::pattern::{find_induced, is_bipartite, is_chordal, oracle::brute_force_induced, standard_patterns};
use crate::strategy::{
    make_strategy, strat_degeneracy, strat_solver_backed, StrategyError, StrategyResult, STRATEGY_NAMES,
};
use crate::structure::{chi_formula_kc5, cycle, recognize_expansion, ModuleFilter};

/// Class names for [`verify_class`]: every strategy name plus `bipartite`
/// (solver, Ann wins for every k >= 2) and `chordal` (degeneracy, k >= ω).
pub const CLASS_NAMES: &[&str] = &[
    "kc5",
    "kc6",
    "cycle",
    "thm7",
    "split_c5",
    "split_c5_plus_clique",
    "p5c4",
    "p6c5",
    "bipartite",
    "chordal",
    "degeneracy",
    "union",
    "join",
    "auto",
    "solver",
];

// Classes whose theorem promises a win for every k >= χ.
const CHI_BOUND_CLASSES: &[&str] =
    &["kc5", "kc6", "cycle", "thm7", "split_c5", "split_c5_plus_clique", "p5c4", "p6c5", "bipartite", "chordal"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KBound {
    Abs(usize),
    /// `χ + offset`.
    Chi(usize),
}

impl KBound {
    fn resolve(self, chi: usize) -> usize {
        match self {
            KBound::Abs(k) => k,
            KBound::Chi(d) => chi + d,
        }
    }
}

/// Inclusive palette range such as `chi..chi+2`, `2..5` or `4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KRange {
    pub lo: KBound,
    pub hi: KBound,
}

impl KRange {
    pub fn chi_plus(lo: usize, hi: usize) -> Self {
        KRange { lo: KBound::Chi(lo), hi: KBound::Chi(hi) }
    }

    pub fn needs_chi(&self) -> bool {
        matches!(self.lo, KBound::Chi(_)) || matches!(self.hi, KBound::Chi(_))
    }

    pub fn resolve(&self, chi: usize) -> std::ops::RangeInclusive<usize> {
        self.lo.resolve(chi).max(1)..=self.hi.resolve(chi).min(MAX_COLORS)
    }
}

impl FromStr for KRange {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || VerifyError::BadRange(s.to_string());
        let bound = |t: &str| -> Result<KBound, VerifyError> {
            let t = t.trim();
            if let Some(rest) = t.strip_prefix("chi") {
                let d = match rest.trim().strip_prefix('+') {
                    Some(d) => d.trim().parse().map_err(|_| bad())?,
                    None if rest.trim().is_empty() => 0,
                    None => return Err(bad()),
                };
                Ok(KBound::Chi(d))
            } else {
                t.parse().map(KBound::Abs).map_err(|_| bad())
            }
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (bound(a)?, bound(b)?),
            None => (bound(s)?, bound(s)?),
        };
        Ok(KRange { lo, hi })
    }
}

impl fmt::Display for KRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |b: KBound| match b {
            KBound::Abs(k) => k.to_string(),
            KBound::Chi(0) => "chi".into(),
            KBound::Chi(d) => format!("chi+{d}"),
        };
        write!(f, "{}..{}", show(self.lo), show(self.hi))
    }
}

/// Budgets shared by the checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    pub solver_budget: u64,
    pub play_budget: u64,
    /// Largest palette in winnable tables; `None` means n, and Δ + 1 for
    /// the sandwich check.
    pub kmax: Option<usize>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            solver_budget: SolverConfig::default().node_budget,
            play_budget: crate::game::DEFAULT_PLAY_BUDGET,
            kmax: None,
        }
    }
}

impl CheckConfig {
    fn solver(&self) -> SolverConfig {
        SolverConfig { node_budget: self.solver_budget, ..SolverConfig::default() }
    }
}

fn strategy_for(class: &str, g: &Graph, k: usize) -> StrategyResult {
    match class {
        "bipartite" if is_bipartite(g).is_some() => strat_solver_backed(g, k),
        "bipartite" => Err(StrategyError::NotApplicable("not bipartite".into())),
        "chordal" if is_chordal(g).is_some() => strat_degeneracy(g, k),
        "chordal" => Err(StrategyError::NotApplicable("not chordal".into())),
        _ => make_strategy(class, g, k),
    }
}

/// Plays the class strategy against the optimal Ben for every k in
/// `range`. A loss, a structure violation, or (for classes whose theorem
/// covers every k >= χ) a refused palette at k >= χ is a violation; a graph
/// outside the class is skipped.
pub fn verify_class(
    g: &Graph,
    index: usize,
    class: &str,
    range: KRange,
    config: &CheckConfig,
) -> Result<Record, VerifyError> {
    if !CLASS_NAMES.contains(&class) || !(STRATEGY_NAMES.contains(&class) || class == "bipartite" || class == "chordal")
    {
        return Err(VerifyError::UnknownClass(class.to_string()));
    }
    let mut rec = Record::new(index, g);
    let chi = match chi_exact(g) {
        Ok(c) => c,
        Err(e) => {
            rec.error = Some(e.to_string());
            return Ok(rec);
        }
    };
    rec.chi = Some(chi);
    let theorem = CHI_BOUND_CLASSES.contains(&class);
    for k in range.resolve(chi) {
        let strategy = match strategy_for(class, g, k) {
            Ok(s) => s,
            Err(StrategyError::NotApplicable(why)) => {
                rec.skipped = Some(why);
                rec.outcomes.clear();
                return Ok(rec);
            }
            Err(e @ StrategyError::BoundViolated { .. }) | Err(e @ StrategyError::NotWinnable { .. }) => {
                if theorem && k >= chi {
                    rec.violations.push(format!("k={k}: {e}"));
                }
                rec.outcomes.push(StrategyOutcome {
                    strategy: class.to_string(),
                    k,
                    outcome: None,
                    error: Some(e.to_string()),
                    transcript: None,
                    positions: 0,
                });
                continue;
            }
            Err(e) => {
                rec.violations.push(format!("k={k}: {e}"));
                continue;
            }
        };
        let name = strategy.name().to_string();
        match play_match_with(g, k, strategy, &BenPolicy::Optimal, config.play_budget) {
            Ok(r) => {
                let lost = r.outcome == Outcome::BenWins;
                if lost {
                    rec.violations.push(format!("k={k}: {name} lost, vertex {:?} blocked", r.blocked));
                }
                rec.outcomes.push(StrategyOutcome {
                    strategy: name,
                    k,
                    outcome: Some(r.outcome),
                    error: None,
                    transcript: lost.then_some(r.transcript),
                    positions: r.positions,
                });
            }
            Err(e) => {
                rec.violations.push(format!("k={k}: {e}"));
                rec.outcomes.push(StrategyOutcome {
                    strategy: name,
                    k,
                    outcome: None,
                    error: Some(e.to_string()),
                    transcript: None,
                    positions: 0,
                });
            }
        }
    }
    Ok(rec)
}

/// Corpus-wide cross-checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    /// `ω <= χ <= χ_i <= Δ + 1`.
    Sandwich,
    /// Chordal graphs: `χ_i = χ = ω` and winnable for every k from χ to kmax.
    ChordalEquality,
    /// Complete C5 expansions: `χ = max(ω, ⌈n/2⌉)`.
    FormulaKc5,
    /// The induced-subgraph detector agrees with brute force on the
    /// standard patterns.
    DetectorOracle,
}

impl Invariant {
    pub const NAMES: &'static [&'static str] = &["sandwich", "chordal-equality", "formula-kc5", "detector-oracle"];
}

impl FromStr for Invariant {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sandwich" => Ok(Invariant::Sandwich),
            "chordal-equality" => Ok(Invariant::ChordalEquality),
            "formula-kc5" => Ok(Invariant::FormulaKc5),
            "detector-oracle" => Ok(Invariant::DetectorOracle),
            _ => Err(VerifyError::UnknownInvariant(s.to_string())),
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = *self as usize;
        f.write_str(Self::NAMES[i])
    }
}

/// Runs one invariant on one graph. Solver failures (size, budget) are
/// recorded as errors, not violations.
pub fn enumerate_check(g: &Graph, index: usize, inv: Invariant, config: &CheckConfig) -> Record {
    let mut rec = Record::new(index, g);
    if let Err(e) = run_invariant(g, inv, config, &mut rec) {
        rec.error = Some(e.to_string());
    }
    rec
}

fn run_invariant(g: &Graph, inv: Invariant, config: &CheckConfig, rec: &mut Record) -> Result<(), GameError> {
    match inv {
        Invariant::Sandwich => {
            let (omega, chi) = (omega_exact(g)?, chi_exact(g)?);
            let bound = g.max_degree() + 1;
            rec.omega = Some(omega);
            rec.chi = Some(chi);
            rec.col = Some(degeneracy(g).col);
            match chi_i_with(g, config.kmax.unwrap_or(bound), config.solver()) {
                Ok(r) => {
                    rec.chi_i = Some(r.chi_i);
                    if !(omega <= chi && chi <= r.chi_i && r.chi_i <= bound) {
                        rec.violations.push(format!("omega={omega} chi={chi} chi_i={} delta+1={bound}", r.chi_i));
                    }
                    rec.winnable = Some(r.winnable);
                }
                Err(GameError::NotWinnableWithinKmax { kmax }) => {
                    rec.violations.push(format!("not winnable for any k <= {kmax} (delta+1 = {bound})"));
                }
                Err(e) => return Err(e),
            }
        }
        Invariant::ChordalEquality => {
            if is_chordal(g).is_none() {
                rec.skipped = Some("not chordal".into());
                return Ok(());
            }
            let (omega, chi) = (omega_exact(g)?, chi_exact(g)?);
            rec.omega = Some(omega);
            rec.chi = Some(chi);
            let kmax = config.kmax.unwrap_or(g.n()).max(chi);
            let r = chi_i_with(g, kmax, config.solver())?;
            rec.chi_i = Some(r.chi_i);
            if !(r.chi_i == chi && chi == omega) {
                rec.violations.push(format!("chi_i={} chi={chi} omega={omega}", r.chi_i));
            }
            if let Some(k) = (chi..=kmax).find(|&k| !r.winnable[k - 1]) {
                rec.violations.push(format!("not winnable with {k} colors"));
            }
            rec.winnable = Some(r.winnable);
        }
        Invariant::FormulaKc5 => {
            let Some(s) = recognize_expansion(g, &cycle(5), ModuleFilter::Complete) else {
                rec.skipped = Some("not a complete expansion of C5".into());
                return Ok(());
            };
            let formula = chi_formula_kc5(&s.sizes()).expect("five nonempty modules");
            let chi = chi_exact(g)?;
            rec.chi = Some(chi);
            if chi != formula {
                rec.violations.push(format!("chi={chi}, formula gives {formula} for {:?}", s.sizes()));
            }
        }
        Invariant::DetectorOracle => {
            for p in standard_patterns() {
                let fast = find_induced(g, &p.graph).expect("standard patterns are small").map(|e| e.map);
                let slow = brute_force_induced(g, &p.graph);
                if fast != slow {
                    rec.violations.push(format!("{}: detector {fast:?}, brute force {slow:?}", p.name));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_expr;

    fn g(expr: &str) -> Graph {
        parse_expr(expr).unwrap()
    }

    #[test]
    fn ranges() {
        let r: KRange = "chi..chi+2".parse().unwrap();
        assert_eq!(r, KRange::chi_plus(0, 2));
        assert_eq!(r.resolve(3), 3..=5);
        assert_eq!("2..5".parse::<KRange>().unwrap().resolve(9), 2..=5);
        assert_eq!("4".parse::<KRange>().unwrap().resolve(1), 4..=4);
        assert_eq!("chi + 1".parse::<KRange>().unwrap().to_string(), "chi+1..chi+1");
        assert!("chi-1".parse::<KRange>().is_err());
        assert!("x..3".parse::<KRange>().is_err());
    }

    #[test]
    fn class_checks() {
        let cfg = CheckConfig::default();
        let r = verify_class(&g("K[C5](2,2,2,2,2)"), 0, "kc5", KRange::chi_plus(0, 1), &cfg).unwrap();
        assert!(r.violations.is_empty() && r.skipped.is_none());
        assert_eq!(r.outcomes.len(), 2);
        let r = verify_class(&g("C6"), 0, "kc5", KRange::chi_plus(0, 0), &cfg).unwrap();
        assert!(r.skipped.is_some());
        let r = verify_class(&g("P4"), 0, "bipartite", "2..3".parse().unwrap(), &cfg).unwrap();
        assert!(r.violations.is_empty());
        assert!(verify_class(&g("P4"), 0, "nope", KRange::chi_plus(0, 0), &cfg).is_err());
    }

    #[test]
    fn invariants() {
        let cfg = CheckConfig::default();
        for inv in Invariant::NAMES {
            let inv: Invariant = inv.parse().unwrap();
            let r = enumerate_check(&g("K1 + C5"), 0, inv, &cfg);
            assert!(r.violations.is_empty() && r.error.is_none(), "{inv}");
        }
        let r = enumerate_check(&g("K[C5](3,1,1,1,1)"), 0, Invariant::FormulaKc5, &cfg);
        assert_eq!(r.chi, Some(4));
        assert!(enumerate_check(&g("C4"), 0, Invariant::ChordalEquality, &cfg).skipped.is_some());
        let r = enumerate_check(&g("K3"), 0, Invariant::ChordalEquality, &cfg);
        assert_eq!(r.chi_i, Some(3));
    }
}
