//! Semantic principles, decided literally on a single framework, and
//! counterexample search over corpora.
//!
//! Every violated verdict carries the least witness: quantified sets are
//! scanned in canonical set order and arguments in index order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::af::{ArgSet, ArgumentationFramework, ExtensionSet};
use crate::enumeration::Corpus;
use crate::error::{Error, Result};
use crate::formats::write_apx;
use crate::semantics::Frame;
use crate::vacuous::{Evaluator, SemanticsSpec};

/// Largest framework for principles that quantify over all subsets.
pub const MAX_SUBSET_SCAN: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrincipleId {
    ConflictFreeness,
    Admissibility,
    ContextFreeness,
    Reinstatement,
    Modularization,
    MeaninglessReduct,
    Existence,
    SingleStatus,
    IMaximality,
    Abstention,
    Directionality,
    NeglectionOfSelfAttackers,
    SeparationProperty,
}

impl PrincipleId {
    pub const ALL: [PrincipleId; 13] = [
        PrincipleId::ConflictFreeness,
        PrincipleId::Admissibility,
        PrincipleId::ContextFreeness,
        PrincipleId::Reinstatement,
        PrincipleId::Modularization,
        PrincipleId::MeaninglessReduct,
        PrincipleId::Existence,
        PrincipleId::SingleStatus,
        PrincipleId::IMaximality,
        PrincipleId::Abstention,
        PrincipleId::Directionality,
        PrincipleId::NeglectionOfSelfAttackers,
        PrincipleId::SeparationProperty,
    ];

    pub fn token(self) -> &'static str {
        match self {
            PrincipleId::ConflictFreeness => "conflict-freeness",
            PrincipleId::Admissibility => "admissibility",
            PrincipleId::ContextFreeness => "context-freeness",
            PrincipleId::Reinstatement => "reinstatement",
            PrincipleId::Modularization => "modularization",
            PrincipleId::MeaninglessReduct => "meaningless-reduct",
            PrincipleId::Existence => "existence",
            PrincipleId::SingleStatus => "single-status",
            PrincipleId::IMaximality => "i-maximality",
            PrincipleId::Abstention => "abstention",
            PrincipleId::Directionality => "directionality",
            PrincipleId::NeglectionOfSelfAttackers => "neglection-of-self-attackers",
            PrincipleId::SeparationProperty => "separation-property",
        }
    }

    fn scans_subsets(self) -> bool {
        matches!(
            self,
            PrincipleId::ContextFreeness | PrincipleId::Directionality | PrincipleId::SeparationProperty
        )
    }
}

impl fmt::Display for PrincipleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for PrincipleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PrincipleId::ALL
            .into_iter()
            .find(|p| p.token() == s)
            .ok_or_else(|| Error::UnknownPrinciple(s.to_string()))
    }
}

/// The instance of a violated quantifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An extension that is not conflict-free, or not admissible.
    Extension(ArgSet),
    /// An extension missing an argument it defends.
    Undefended { extension: ArgSet, argument: usize },
    /// `extension ∈ σ(F)` but not in `σ(F↓superset)`; with no superset,
    /// `extension ∉ σ(F)` although it survives every restriction.
    Context { extension: ArgSet, superset: Option<ArgSet> },
    /// `first ∈ σ(F)`, `second ∈ σ(F^first)`, `first ∪ second ∉ σ(F)`.
    Modular { first: ArgSet, second: ArgSet },
    /// `extension ∈ σ(F)` whose reduct has the nonempty `reduct_extension`.
    Reduct { extension: ArgSet, reduct_extension: ArgSet },
    NoExtension,
    Count(usize),
    /// Two extensions with `smaller ⊊ larger`.
    Chain { smaller: ArgSet, larger: ArgSet },
    /// `argument` is accepted by one extension, rejected by another, and
    /// undecided in none.
    NeverUndecided { argument: usize, accepting: ArgSet, rejecting: ArgSet },
    /// An unattacked set on which the principle's equation fails.
    Unattacked(ArgSet),
    /// A set in exactly one of `σ(F)` and `σ(F↓(A ∖ self-attackers))`.
    Mismatch(ArgSet),
}

impl Witness {
    pub fn to_json(&self, af: &ArgumentationFramework) -> Value {
        let names = |s: &ArgSet| af.set_names(*s);
        match self {
            Witness::Extension(e) => json!({"kind": "extension", "E": names(e)}),
            Witness::Undefended { extension, argument } => {
                json!({"kind": "undefended", "E": names(extension), "argument": af.name(*argument)})
            }
            Witness::Context { extension, superset } => json!({
                "kind": "context",
                "E": names(extension),
                "S": superset.as_ref().map(names),
            }),
            Witness::Modular { first, second } => {
                json!({"kind": "modular", "E": names(first), "E'": names(second)})
            }
            Witness::Reduct { extension, reduct_extension } => {
                json!({"kind": "reduct", "E": names(extension), "D": names(reduct_extension)})
            }
            Witness::NoExtension => json!({"kind": "no-extension"}),
            Witness::Count(count) => json!({"kind": "count", "count": count}),
            Witness::Chain { smaller, larger } => {
                json!({"kind": "chain", "E": names(smaller), "D": names(larger)})
            }
            Witness::NeverUndecided { argument, accepting, rejecting } => json!({
                "kind": "never-undecided",
                "argument": af.name(*argument),
                "accepting": names(accepting),
                "rejecting": names(rejecting),
            }),
            Witness::Unattacked(u) => json!({"kind": "unattacked", "U": names(u)}),
            Witness::Mismatch(e) => json!({"kind": "mismatch", "E": names(e)}),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Violated(Witness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub principle: PrincipleId,
    pub spec: SemanticsSpec,
    pub framework: ArgumentationFramework,
    pub outcome: Outcome,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Holds => None,
            Outcome::Violated(w) => Some(w),
        }
    }

    /// Re-checks the witness in isolation. Holding verdicts replay as `true`
    /// iff a fresh check still holds.
    pub fn replay(&self) -> Result<bool> {
        match &self.outcome {
            Outcome::Holds => Ok(check(&self.framework, &self.spec, self.principle)?.holds()),
            Outcome::Violated(w) => confirms(&self.framework, &self.spec, self.principle, w),
        }
    }

    pub fn to_json(&self) -> Value {
        let (outcome, witness) = match &self.outcome {
            Outcome::Holds => ("holds", Value::Null),
            Outcome::Violated(w) => ("violated", w.to_json(&self.framework)),
        };
        json!({
            "principle": self.principle.token(),
            "semantics": self.spec.to_string(),
            "af": write_apx(&self.framework),
            "outcome": outcome,
            "witness": witness,
        })
    }
}

/// Every subset of `mask` in canonical order.
fn subsets(mask: ArgSet) -> Vec<ArgSet> {
    let bits = mask.bits();
    let mut out = Vec::with_capacity(1 << mask.len());
    let mut sub = 0u64;
    loop {
        out.push(ArgSet::from_bits(sub));
        if sub == bits {
            break;
        }
        sub = (sub.wrapping_sub(bits)) & bits;
    }
    out.sort_unstable();
    out
}

fn unattacked_subsets(frame: Frame<'_>) -> Vec<ArgSet> {
    subsets(frame.args())
        .into_iter()
        .filter(|&u| frame.minus(u).is_subset(u))
        .collect()
}

fn first_difference(left: &ExtensionSet, right: &ExtensionSet) -> Option<ArgSet> {
    left.iter()
        .filter(|e| !right.contains(*e))
        .chain(right.iter().filter(|e| !left.contains(*e)))
        .min()
}

fn guard(af: &ArgumentationFramework, p: PrincipleId) -> Result<()> {
    if p.scans_subsets() && af.len() > MAX_SUBSET_SCAN {
        return Err(Error::TooLarge {
            requested: af.len(),
            limit: MAX_SUBSET_SCAN,
        });
    }
    Ok(())
}

pub fn check(af: &ArgumentationFramework, spec: &SemanticsSpec, p: PrincipleId) -> Result<Verdict> {
    let outcome = check_with(&mut Evaluator::new(af), spec, p)?;
    Ok(Verdict {
        principle: p,
        spec: spec.clone(),
        framework: af.clone(),
        outcome,
    })
}

/// Decides `p` for `spec` on the evaluator's framework, sharing its cache.
pub fn check_with(ev: &mut Evaluator<'_>, spec: &SemanticsSpec, p: PrincipleId) -> Result<Outcome> {
    let af = ev.framework();
    guard(af, p)?;
    let all = af.arguments();
    let frame = Frame::whole(af);
    let sigma = ev.eval(spec)?;
    let violated = |w| Ok(Outcome::Violated(w));

    match p {
        PrincipleId::ConflictFreeness => {
            if let Some(e) = sigma.iter().find(|&e| !frame.is_conflict_free(e)) {
                return violated(Witness::Extension(e));
            }
        }
        PrincipleId::Admissibility => {
            if let Some(e) = sigma.iter().find(|&e| !frame.is_admissible(e)) {
                return violated(Witness::Extension(e));
            }
        }
        PrincipleId::ContextFreeness => {
            for e in subsets(all) {
                let inside = sigma.contains(e);
                let mut everywhere = true;
                for s in subsets(all - e).into_iter().map(|rest| rest | e) {
                    if !ev.eval_on(s, spec)?.contains(e) {
                        everywhere = false;
                        if inside {
                            return violated(Witness::Context { extension: e, superset: Some(s) });
                        }
                        break;
                    }
                }
                if everywhere && !inside {
                    return violated(Witness::Context { extension: e, superset: None });
                }
            }
        }
        PrincipleId::Reinstatement => {
            for e in sigma.iter() {
                if let Some(a) = (frame.defended(e) - e).iter().next() {
                    return violated(Witness::Undefended { extension: e, argument: a });
                }
            }
        }
        PrincipleId::Modularization => {
            for e in sigma.iter() {
                for second in ev.eval_on(frame.reduct(e), spec)?.iter() {
                    if !sigma.contains(e | second) {
                        return violated(Witness::Modular { first: e, second });
                    }
                }
            }
        }
        PrincipleId::MeaninglessReduct => {
            for e in sigma.iter() {
                if let Some(d) = ev.eval_on(frame.reduct(e), spec)?.iter().find(|d| !d.is_empty()) {
                    return violated(Witness::Reduct { extension: e, reduct_extension: d });
                }
            }
        }
        PrincipleId::Existence => {
            if sigma.is_empty() {
                return violated(Witness::NoExtension);
            }
        }
        PrincipleId::SingleStatus => {
            if sigma.len() != 1 {
                return violated(Witness::Count(sigma.len()));
            }
        }
        PrincipleId::IMaximality => {
            for smaller in sigma.iter() {
                if let Some(larger) = sigma.iter().find(|&d| smaller.is_strict_subset(d)) {
                    return violated(Witness::Chain { smaller, larger });
                }
            }
        }
        PrincipleId::Abstention => {
            for a in all.iter() {
                let accepting = sigma.iter().find(|e| e.contains(a));
                let rejecting = sigma.iter().find(|&e| frame.plus(e).contains(a));
                if let (Some(accepting), Some(rejecting)) = (accepting, rejecting) {
                    if !sigma.iter().any(|e| !(e | frame.plus(e)).contains(a)) {
                        return violated(Witness::NeverUndecided { argument: a, accepting, rejecting });
                    }
                }
            }
        }
        PrincipleId::Directionality => {
            for u in unattacked_subsets(frame) {
                let projected = sigma.map(|e| e & u);
                if *ev.eval_on(u, spec)? != projected {
                    return violated(Witness::Unattacked(u));
                }
            }
        }
        PrincipleId::NeglectionOfSelfAttackers => {
            let kept = ev.eval_on(all - frame.self_attackers(), spec)?;
            if let Some(e) = first_difference(&sigma, &kept) {
                return violated(Witness::Mismatch(e));
            }
        }
        PrincipleId::SeparationProperty => {
            for u in unattacked_subsets(frame) {
                if ev.eval_on(u, spec)?.is_vacuous() && *ev.eval_on(all - u, spec)? != *sigma {
                    return violated(Witness::Unattacked(u));
                }
            }
        }
    }
    Ok(Outcome::Holds)
}

/// Whether `witness` instantiates a violation of `p` on `af`. Usable for
/// witnesses other than the least one, e.g. ones stated by hand.
pub fn confirms(af: &ArgumentationFramework, spec: &SemanticsSpec, p: PrincipleId, witness: &Witness) -> Result<bool> {
    guard(af, p)?;
    let mut ev = Evaluator::new(af);
    let all = af.arguments();
    let frame = Frame::whole(af);
    let sigma = ev.eval(spec)?;
    let set_ok = |s: &ArgSet| s.is_subset(all);

    Ok(match (p, witness) {
        (PrincipleId::ConflictFreeness, Witness::Extension(e)) => {
            set_ok(e) && sigma.contains(*e) && !frame.is_conflict_free(*e)
        }
        (PrincipleId::Admissibility, Witness::Extension(e)) => {
            set_ok(e) && sigma.contains(*e) && !frame.is_admissible(*e)
        }
        (PrincipleId::ContextFreeness, Witness::Context { extension, superset: Some(s) }) => {
            set_ok(s) && extension.is_subset(*s) && sigma.contains(*extension) && !ev.eval_on(*s, spec)?.contains(*extension)
        }
        (PrincipleId::ContextFreeness, Witness::Context { extension, superset: None }) => {
            if !set_ok(extension) || sigma.contains(*extension) {
                return Ok(false);
            }
            for rest in subsets(all - *extension) {
                if !ev.eval_on(rest | *extension, spec)?.contains(*extension) {
                    return Ok(false);
                }
            }
            true
        }
        (PrincipleId::Reinstatement, Witness::Undefended { extension, argument }) => {
            set_ok(extension)
                && sigma.contains(*extension)
                && frame.defended(*extension).contains(*argument)
                && !extension.contains(*argument)
        }
        (PrincipleId::Modularization, Witness::Modular { first, second }) => {
            set_ok(first)
                && sigma.contains(*first)
                && ev.eval_on(frame.reduct(*first), spec)?.contains(*second)
                && !sigma.contains(*first | *second)
        }
        (PrincipleId::MeaninglessReduct, Witness::Reduct { extension, reduct_extension }) => {
            set_ok(extension)
                && sigma.contains(*extension)
                && !reduct_extension.is_empty()
                && ev.eval_on(frame.reduct(*extension), spec)?.contains(*reduct_extension)
        }
        (PrincipleId::Existence, Witness::NoExtension) => sigma.is_empty(),
        (PrincipleId::SingleStatus, Witness::Count(c)) => *c == sigma.len() && *c != 1,
        (PrincipleId::IMaximality, Witness::Chain { smaller, larger }) => {
            sigma.contains(*smaller) && sigma.contains(*larger) && smaller.is_strict_subset(*larger)
        }
        (PrincipleId::Abstention, Witness::NeverUndecided { argument, accepting, rejecting }) => {
            let a = *argument;
            a < af.len()
                && sigma.contains(*accepting)
                && accepting.contains(a)
                && sigma.contains(*rejecting)
                && frame.plus(*rejecting).contains(a)
                && sigma.iter().all(|e| (e | frame.plus(e)).contains(a))
        }
        (PrincipleId::Directionality, Witness::Unattacked(u)) => {
            set_ok(u) && frame.minus(*u).is_subset(*u) && *ev.eval_on(*u, spec)? != sigma.map(|e| e & *u)
        }
        (PrincipleId::NeglectionOfSelfAttackers, Witness::Mismatch(e)) => {
            let kept = ev.eval_on(all - frame.self_attackers(), spec)?;
            sigma.contains(*e) != kept.contains(*e)
        }
        (PrincipleId::SeparationProperty, Witness::Unattacked(u)) => {
            set_ok(u)
                && frame.minus(*u).is_subset(*u)
                && ev.eval_on(*u, spec)?.is_vacuous()
                && *ev.eval_on(all - *u, spec)? != *sigma
        }
        _ => false,
    })
}

/// The violation at the least corpus index, if any. Workers scan the corpus
/// in parallel; the result does not depend on their number or scheduling.
pub fn find_counterexample(corpus: &Corpus, spec: &SemanticsSpec, p: PrincipleId) -> Result<Option<Verdict>> {
    (0..corpus.len())
        .into_par_iter()
        .find_map_first(|index| {
            let af = corpus.get(index).expect("index within corpus");
            match check(&af, spec, p) {
                Ok(v) if v.holds() => None,
                other => Some(other),
            }
        })
        .transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::fixtures::*;
    use crate::enumeration::CorpusSpec;
    use crate::semantics::ClassicalSemantics;
    use proptest::prelude::*;

    fn ud() -> SemanticsSpec {
        "ud".parse().unwrap()
    }

    fn set(af: &ArgumentationFramework, names: &[&str]) -> ArgSet {
        af.set_of(names).unwrap()
    }

    fn violated(af: &ArgumentationFramework, spec: &SemanticsSpec, p: PrincipleId) -> Witness {
        let v = check(af, spec, p).unwrap();
        assert!(v.replay().unwrap(), "{p} witness does not replay");
        v.witness().cloned().unwrap_or_else(|| panic!("{p} unexpectedly holds on {af:?}"))
    }

    #[test]
    fn principle_tokens_round_trip() {
        for p in PrincipleId::ALL {
            assert_eq!(p.token().parse::<PrincipleId>().unwrap(), p);
        }
        assert!("monotonicity".parse::<PrincipleId>().is_err());
    }

    #[test]
    fn subsets_are_canonical() {
        let s = subsets(ArgSet::from_bits(0b101));
        assert_eq!(s, vec![ArgSet::EMPTY, ArgSet::singleton(0), ArgSet::singleton(2), ArgSet::from_bits(0b101)]);
        assert_eq!(subsets(ArgSet::EMPTY), vec![ArgSet::EMPTY]);
    }

    #[test]
    fn undisputed_violations_on_fixtures() {
        let (f1, f5, f6, f7) = (f1(), f5(), f6(), f7());
        assert_eq!(violated(&f5, &ud(), PrincipleId::Admissibility), Witness::Extension(set(&f5, &["b"])));
        assert_eq!(
            violated(&f5, &ud(), PrincipleId::IMaximality),
            Witness::Chain { smaller: ArgSet::EMPTY, larger: set(&f5, &["b"]) }
        );
        match violated(&f6, &ud(), PrincipleId::Abstention) {
            Witness::NeverUndecided { argument, .. } => assert_eq!(f6.name(argument), "a"),
            w => panic!("unexpected witness {w:?}"),
        }
        assert_eq!(violated(&f6, &ud(), PrincipleId::SingleStatus), Witness::Count(2));
        assert_eq!(
            violated(&f7, &ud(), PrincipleId::Modularization),
            Witness::Modular { first: set(&f7, &["c"]), second: set(&f7, &["b"]) }
        );
        violated(&f7, &ud(), PrincipleId::NeglectionOfSelfAttackers);
        assert_eq!(
            violated(&f1, &ud(), PrincipleId::SeparationProperty),
            Witness::Unattacked(set(&f1, &["a", "b", "c"]))
        );
        let adm_cf = SemanticsSpec::vac(ClassicalSemantics::Admissible.into(), ClassicalSemantics::ConflictFree.into());
        assert_eq!(violated(&f5, &adm_cf, PrincipleId::Directionality), Witness::Unattacked(ArgSet::EMPTY));
    }

    #[test]
    fn meaningless_reduct_witnesses() {
        let f7 = f7();
        // The least witness is the empty extension, whose reduct is F7 itself.
        assert_eq!(
            violated(&f7, &ud(), PrincipleId::MeaninglessReduct),
            Witness::Reduct { extension: ArgSet::EMPTY, reduct_extension: set(&f7, &["b"]) }
        );
        // {c} is a witness as well: {b} is undisputed in its reduct.
        let by_hand = Witness::Reduct { extension: set(&f7, &["c"]), reduct_extension: set(&f7, &["b"]) };
        assert!(confirms(&f7, &ud(), PrincipleId::MeaninglessReduct, &by_hand).unwrap());
        let bogus = Witness::Reduct { extension: set(&f7, &["b"]), reduct_extension: set(&f7, &["c"]) };
        assert!(!confirms(&f7, &ud(), PrincipleId::MeaninglessReduct, &bogus).unwrap());
    }

    #[test]
    fn neglection_example_sets() {
        let f7 = f7();
        let ud = ud();
        let sigma = crate::vacuous::vac_extensions(&f7, &ud).unwrap();
        assert!(sigma.contains(set(&f7, &["c"])));
        let sub = f7.restrict(set(&f7, &["b", "c"])).unwrap();
        let reduced = sub.lift_all(&crate::vacuous::vac_extensions(&sub.framework, &ud).unwrap());
        assert_eq!(reduced.as_slice(), &[set(&f7, &["b"])]);
    }

    #[test]
    fn separation_on_f7_is_also_a_witness() {
        assert!(!check(&f7(), &ud(), PrincipleId::SeparationProperty).unwrap().holds());
    }

    #[test]
    fn holding_verdicts() {
        let pr: SemanticsSpec = "pr".parse().unwrap();
        for (name, af) in all() {
            assert!(check(&af, &pr, PrincipleId::ConflictFreeness).unwrap().holds(), "{name}");
        }
        assert!(check(&f1(), &ud(), PrincipleId::Reinstatement).unwrap().holds());
    }

    #[test]
    fn subset_scans_are_guarded() {
        let big = ArgumentationFramework::new(7).unwrap();
        assert!(check(&big, &ud(), PrincipleId::ContextFreeness).is_err());
        assert!(check(&big, &ud(), PrincipleId::Existence).is_ok());
    }

    #[test]
    fn counterexample_search_finds_f5() {
        let corpus = Corpus::new((1..=3).map(CorpusSpec::exhaustive)).unwrap();
        let v = find_counterexample(&corpus, &ud(), PrincipleId::Admissibility).unwrap().unwrap();
        assert_eq!(v.framework, f5().unlabelled());
        assert_eq!(v.witness(), Some(&Witness::Extension(ArgSet::singleton(1))));
        let json = v.to_json();
        assert_eq!(json["outcome"], "violated");
        assert_eq!(json["witness"]["E"], json!(["b"]));
    }

    #[test]
    fn no_conflicts_or_antichain_breaks() {
        let corpus = Corpus::new((1..=3).map(CorpusSpec::exhaustive)).unwrap();
        assert!(find_counterexample(&corpus, &ud(), PrincipleId::ConflictFreeness).unwrap().is_none());
        let pr: SemanticsSpec = "pr".parse().unwrap();
        assert!(find_counterexample(&corpus, &pr, PrincipleId::IMaximality).unwrap().is_none());
    }

    #[test]
    fn classical_directionality() {
        let corpus = Corpus::new((1..=3).map(CorpusSpec::exhaustive)).unwrap();
        for token in ["adm", "cf", "gr", "co", "pr"] {
            let spec: SemanticsSpec = token.parse().unwrap();
            assert!(find_counterexample(&corpus, &spec, PrincipleId::Directionality).unwrap().is_none(), "{token}");
        }
    }

    fn arb_af() -> impl Strategy<Value = ArgumentationFramework> {
        (0usize..=4).prop_flat_map(|n| {
            any::<u64>().prop_map(move |m| crate::enumeration::af_from_mask(n, m & ((1u64 << (n * n)) - 1)))
        })
    }

    fn arb_spec() -> impl Strategy<Value = SemanticsSpec> {
        let classical = prop::sample::select(ClassicalSemantics::ALL.to_vec());
        (classical.clone(), classical).prop_map(|(b, v)| SemanticsSpec::vac(b.into(), v.into()))
    }

    proptest! {
        #[test]
        fn verdicts_replay(af in arb_af(), spec in arb_spec(), p in prop::sample::select(PrincipleId::ALL.to_vec())) {
            let v = check(&af, &spec, p).unwrap();
            prop_assert!(v.replay().unwrap());
        }

        #[test]
        fn inherited_principles(af in arb_af(), v in prop::sample::select(ClassicalSemantics::ALL.to_vec())) {
            use ClassicalSemantics::*;
            let cf_base = SemanticsSpec::vac(ConflictFree.into(), v.into());
            prop_assert!(check(&af, &cf_base, PrincipleId::ConflictFreeness).unwrap().holds());
            let adm_base = SemanticsSpec::vac(Admissible.into(), v.into());
            prop_assert!(check(&af, &adm_base, PrincipleId::Admissibility).unwrap().holds());
            let adm_stb = SemanticsSpec::vac(Admissible.into(), Stable.into());
            prop_assert!(check(&af, &adm_stb, PrincipleId::Existence).unwrap().holds());
        }

        #[test]
        fn meaningless_reduct_when_base_below_vacuity(af in arb_af(),
            b in prop::sample::select(ClassicalSemantics::ALL.to_vec()),
            v in prop::sample::select(ClassicalSemantics::ALL.to_vec())) {
            // σ ⊆ τ must hold on the reducts too, so test every restriction.
            let mut ev = Evaluator::new(&af);
            let mut below = true;
            for frame in subsets(af.arguments()) {
                below &= ev.eval_on(frame, &b.into()).unwrap().is_subset(&ev.eval_on(frame, &v.into()).unwrap());
            }
            if below {
                let spec = SemanticsSpec::vac(b.into(), v.into());
                prop_assert!(check(&af, &spec, PrincipleId::MeaninglessReduct).unwrap().holds());
            }
        }
    }
}
