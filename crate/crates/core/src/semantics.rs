//! The nine classical extension-based semantics, enumerated by backtracking
//! over conflict-free sets, plus direct characterisations of the cogent
//! stable and ub-complete semantics.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::af::{ArgSet, ArgumentationFramework, ExtensionSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassicalSemantics {
    ConflictFree,
    Naive,
    Admissible,
    Complete,
    Preferred,
    Grounded,
    Ideal,
    Stable,
    SemiStable,
}

impl ClassicalSemantics {
    pub const ALL: [ClassicalSemantics; 9] = [
        ClassicalSemantics::ConflictFree,
        ClassicalSemantics::Naive,
        ClassicalSemantics::Admissible,
        ClassicalSemantics::Complete,
        ClassicalSemantics::Preferred,
        ClassicalSemantics::Grounded,
        ClassicalSemantics::Ideal,
        ClassicalSemantics::Stable,
        ClassicalSemantics::SemiStable,
    ];

    pub fn token(self) -> &'static str {
        match self {
            ClassicalSemantics::ConflictFree => "cf",
            ClassicalSemantics::Naive => "na",
            ClassicalSemantics::Admissible => "adm",
            ClassicalSemantics::Complete => "co",
            ClassicalSemantics::Preferred => "pr",
            ClassicalSemantics::Grounded => "gr",
            ClassicalSemantics::Ideal => "id",
            ClassicalSemantics::Stable => "stb",
            ClassicalSemantics::SemiStable => "sst",
        }
    }
}

impl fmt::Display for ClassicalSemantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for ClassicalSemantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassicalSemantics::ALL
            .into_iter()
            .find(|sem| sem.token() == s)
            .ok_or_else(|| Error::UnknownSemantics(s.to_string()))
    }
}

/// A framework viewed through a mask of active arguments.
///
/// Evaluating a semantics on `Frame { af, args: S }` is evaluating it on the
/// restriction `F↓S`, with results expressed in the parent's indices. Every
/// reduct and restriction the harness needs is a frame of the root framework,
/// so nothing is reindexed on the hot path.
#[derive(Clone, Copy)]
pub struct Frame<'a> {
    af: &'a ArgumentationFramework,
    args: ArgSet,
}

impl<'a> Frame<'a> {
    pub fn new(af: &'a ArgumentationFramework, args: ArgSet) -> Result<Self> {
        af.check_set(args)?;
        Ok(Frame { af, args })
    }

    pub fn whole(af: &'a ArgumentationFramework) -> Self {
        Frame {
            af,
            args: af.arguments(),
        }
    }

    pub fn framework(&self) -> &'a ArgumentationFramework {
        self.af
    }

    pub fn args(&self) -> ArgSet {
        self.args
    }

    pub fn plus(&self, set: ArgSet) -> ArgSet {
        self.af.plus_unchecked(set) & self.args
    }

    pub fn minus(&self, set: ArgSet) -> ArgSet {
        self.af.minus_unchecked(set) & self.args
    }

    pub fn defended(&self, set: ArgSet) -> ArgSet {
        let plus = self.plus(set);
        self.args
            .iter()
            .filter(|&a| (self.af.attackers(a) & self.args).is_subset(plus))
            .collect()
    }

    pub fn is_conflict_free(&self, set: ArgSet) -> bool {
        self.af.plus_unchecked(set).is_disjoint(set)
    }

    pub fn self_attackers(&self) -> ArgSet {
        self.af.self_attackers() & self.args
    }

    /// Arguments of the reduct of this frame with respect to `set`.
    pub fn reduct(&self, set: ArgSet) -> ArgSet {
        self.args - (set | self.plus(set))
    }

    /// Visits every conflict-free subset of the frame exactly once, extending
    /// only conflict-free sets. Members are added in ascending index order.
    pub fn for_each_conflict_free<B>(
        &self,
        mut visit: impl FnMut(ArgSet) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let candidates = self.args - self.self_attackers();
        self.walk(ArgSet::EMPTY, candidates, &mut visit)
    }

    fn walk<B>(
        &self,
        current: ArgSet,
        mut remaining: ArgSet,
        visit: &mut impl FnMut(ArgSet) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        visit(current)?;
        while let Some(next) = remaining.iter().next() {
            remaining.remove(next);
            let conflicts = self.af.targets(next) | self.af.attackers(next);
            self.walk(current.with(next), remaining - conflicts, visit)?;
        }
        ControlFlow::Continue(())
    }

    fn collect_conflict_free(&self, mut keep: impl FnMut(ArgSet) -> bool) -> Vec<ArgSet> {
        let mut out = Vec::new();
        let _ = self.for_each_conflict_free::<()>(|e| {
            if keep(e) {
                out.push(e);
            }
            ControlFlow::Continue(())
        });
        out
    }

    fn find_conflict_free(&self, mut hit: impl FnMut(ArgSet) -> bool) -> bool {
        self.for_each_conflict_free(|e| {
            if hit(e) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .is_break()
    }

    pub fn is_admissible(&self, set: ArgSet) -> bool {
        self.is_conflict_free(set) && self.minus(set).is_subset(self.plus(set))
    }

    pub fn is_complete(&self, set: ArgSet) -> bool {
        self.is_conflict_free(set) && self.defended(set) == set
    }

    pub fn is_stable(&self, set: ArgSet) -> bool {
        self.is_conflict_free(set) && self.plus(set) == self.args - set
    }

    /// No argument of the frame can be added without conflict.
    fn is_naive(&self, set: ArgSet) -> bool {
        let addable = self.args - set - self.self_attackers();
        addable
            .iter()
            .all(|a| !(self.af.targets(a) | self.af.attackers(a)).is_disjoint(set))
    }

    pub fn conflict_free(&self) -> ExtensionSet {
        self.collect_conflict_free(|_| true).into()
    }

    pub fn naive(&self) -> ExtensionSet {
        self.collect_conflict_free(|e| self.is_naive(e)).into()
    }

    pub fn admissible(&self) -> ExtensionSet {
        self.collect_conflict_free(|e| self.is_admissible(e)).into()
    }

    pub fn complete(&self) -> ExtensionSet {
        self.collect_conflict_free(|e| self.is_complete(e)).into()
    }

    pub fn preferred(&self) -> ExtensionSet {
        self.complete().maximal()
    }

    /// Least fixed point of `Γ`, iterated from the empty set.
    pub fn grounded(&self) -> ArgSet {
        let mut current = ArgSet::EMPTY;
        loop {
            let next = self.defended(current);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// The `⊆`-maximal complete extension contained in every preferred one.
    pub fn ideal(&self) -> Result<ArgSet> {
        let preferred = self.preferred();
        let candidates = self
            .complete()
            .filter(|e| preferred.iter().all(|p| e.is_subset(p)))
            .maximal();
        match candidates.as_slice() {
            [ideal] => Ok(*ideal),
            other => Err(Error::Invariant(format!(
                "expected a unique ideal extension, found {}",
                other.len()
            ))),
        }
    }

    pub fn stable(&self) -> ExtensionSet {
        self.collect_conflict_free(|e| self.is_stable(e)).into()
    }

    /// Preferred extensions whose range `E ∪ E⁺` is `⊆`-maximal among
    /// preferred ranges.
    pub fn semi_stable(&self) -> ExtensionSet {
        let preferred = self.preferred();
        let range = |e: ArgSet| e | self.plus(e);
        preferred.filter(|e| {
            !preferred
                .iter()
                .any(|d| range(e).is_strict_subset(range(d)))
        })
    }

    pub fn extensions(&self, sem: ClassicalSemantics) -> Result<ExtensionSet> {
        Ok(match sem {
            ClassicalSemantics::ConflictFree => self.conflict_free(),
            ClassicalSemantics::Naive => self.naive(),
            ClassicalSemantics::Admissible => self.admissible(),
            ClassicalSemantics::Complete => self.complete(),
            ClassicalSemantics::Preferred => self.preferred(),
            ClassicalSemantics::Grounded => [self.grounded()].into_iter().collect(),
            ClassicalSemantics::Ideal => [self.ideal()?].into_iter().collect(),
            ClassicalSemantics::Stable => self.stable(),
            ClassicalSemantics::SemiStable => self.semi_stable(),
        })
    }

    /// Whether some extension is nonempty. Conflict-free, admissible,
    /// complete and stable stop at the first nonempty witness; the others
    /// are enumerated in full.
    pub fn has_nonempty(&self, sem: ClassicalSemantics) -> Result<bool> {
        Ok(match sem {
            ClassicalSemantics::ConflictFree => self.find_conflict_free(|e| !e.is_empty()),
            ClassicalSemantics::Admissible => {
                self.find_conflict_free(|e| !e.is_empty() && self.is_admissible(e))
            }
            ClassicalSemantics::Complete => {
                self.find_conflict_free(|e| !e.is_empty() && self.is_complete(e))
            }
            ClassicalSemantics::Stable => {
                self.find_conflict_free(|e| !e.is_empty() && self.is_stable(e))
            }
            ClassicalSemantics::Grounded => !self.grounded().is_empty(),
            other => !self.extensions(other)?.is_vacuous(),
        })
    }
}

/// `σ(F)` for a classical semantics, in canonical order.
pub fn extensions(af: &ArgumentationFramework, sem: ClassicalSemantics) -> Result<ExtensionSet> {
    Frame::whole(af).extensions(sem)
}

/// Union of all `σ`-extensions: the credulously accepted arguments.
pub fn credulous_union(af: &ArgumentationFramework, sem: ClassicalSemantics) -> Result<ArgSet> {
    Ok(extensions(af, sem)?.credulous())
}

/// Cogent stable semantics: stable extensions of the framework with all
/// self-attacking arguments deleted, mapped back to the original indices.
pub fn stb_cog_direct(af: &ArgumentationFramework) -> Result<ExtensionSet> {
    let restriction = af.restrict(af.arguments() - af.self_attackers())?;
    let stable = extensions(&restriction.framework, ClassicalSemantics::Stable)?;
    Ok(restriction.lift_all(&stable))
}

/// ub-complete semantics: conflict-free sets `E` with `Γ(E) ⊆ E`.
pub fn co_ub_direct(af: &ArgumentationFramework) -> Result<ExtensionSet> {
    let mut out = Vec::new();
    for bits in 0..1u128 << af.len() {
        let e = ArgSet::from_bits(bits as u64);
        if af.is_conflict_free(e)? && af.defended_set(e)?.is_subset(e) {
            out.push(e);
        }
    }
    Ok(out.into())
}

/// Grounded extension taken as the `⊆`-least complete extension. Kept as a
/// cross-check for the fixpoint iteration in [`Frame::grounded`].
pub fn grounded_from_complete(af: &ArgumentationFramework) -> Result<ArgSet> {
    let complete = extensions(af, ClassicalSemantics::Complete)?;
    complete
        .iter()
        .find(|g| complete.iter().all(|e| g.is_subset(e)))
        .ok_or_else(|| Error::Invariant("no least complete extension".into()))
}
