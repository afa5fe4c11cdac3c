//! The vacuous reduct combinator `vac(σ, τ)` and the registry of named
//! instantiations.
//!
//! `vac(σ, τ)(F)` keeps the `σ`-extensions `E` of `F` whose reduct `F^E` has
//! no nonempty `τ`-extension.

use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use fnv::FnvHashMap;

use crate::af::{ArgSet, ArgumentationFramework, ExtensionSet};
use crate::error::{Error, Result};
use crate::semantics::{ClassicalSemantics, Frame};

/// Identifier of a semantics: classical, a registry name, or a combinator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemanticsSpec {
    Classical(ClassicalSemantics),
    Named(String),
    Vac {
        base: Box<SemanticsSpec>,
        vacuity: Box<SemanticsSpec>,
    },
}

impl SemanticsSpec {
    pub fn vac(base: SemanticsSpec, vacuity: SemanticsSpec) -> Self {
        SemanticsSpec::Vac {
            base: Box::new(base),
            vacuity: Box::new(vacuity),
        }
    }

    /// Replaces every registry name by its definition.
    pub fn resolved(&self) -> Result<SemanticsSpec> {
        match self {
            SemanticsSpec::Classical(_) => Ok(self.clone()),
            SemanticsSpec::Named(token) => resolve(token)?.resolved(),
            SemanticsSpec::Vac { base, vacuity } => {
                Ok(SemanticsSpec::vac(base.resolved()?, vacuity.resolved()?))
            }
        }
    }

    fn is_resolved(&self) -> bool {
        match self {
            SemanticsSpec::Classical(_) => true,
            SemanticsSpec::Named(_) => false,
            SemanticsSpec::Vac { base, vacuity } => base.is_resolved() && vacuity.is_resolved(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            SemanticsSpec::Vac { base, vacuity } => 1 + base.depth().max(vacuity.depth()),
            _ => 0,
        }
    }

    /// The base condition of a combinator, after resolving names.
    pub fn base(&self) -> Result<Option<SemanticsSpec>> {
        Ok(match self.resolved()? {
            SemanticsSpec::Vac { base, .. } => Some(*base),
            _ => None,
        })
    }
}

impl From<ClassicalSemantics> for SemanticsSpec {
    fn from(sem: ClassicalSemantics) -> Self {
        SemanticsSpec::Classical(sem)
    }
}

impl fmt::Display for SemanticsSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemanticsSpec::Classical(sem) => write!(f, "{sem}"),
            SemanticsSpec::Named(token) => f.write_str(token),
            SemanticsSpec::Vac { base, vacuity } => write!(f, "vac:{base}:{vacuity}"),
        }
    }
}

/// Token grammar: a classical token, a registry name, or `vac:<spec>:<spec>`
/// in prefix form, so `vac:vac:cf:adm:gr` is `vac(vac(cf, adm), gr)`.
impl FromStr for SemanticsSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let spec = parse_prefix(&mut parts, s)?;
        if parts.next().is_some() {
            return Err(Error::UnknownSemantics(s.to_string()));
        }
        Ok(spec)
    }
}

fn parse_prefix<'a>(parts: &mut impl Iterator<Item = &'a str>, whole: &str) -> Result<SemanticsSpec> {
    let token = parts
        .next()
        .ok_or_else(|| Error::UnknownSemantics(whole.to_string()))?;
    if token == "vac" {
        let base = parse_prefix(parts, whole)?;
        let vacuity = parse_prefix(parts, whole)?;
        return Ok(SemanticsSpec::vac(base, vacuity));
    }
    if let Ok(sem) = token.parse::<ClassicalSemantics>() {
        return Ok(SemanticsSpec::Classical(sem));
    }
    if REGISTRY.iter().any(|entry| entry.token == token) {
        return Ok(SemanticsSpec::Named(token.to_string()));
    }
    Err(Error::UnknownSemantics(token.to_string()))
}

/// A named instantiation of the combinator.
#[derive(Clone, Copy, Debug)]
pub struct NamedEntry {
    pub token: &'static str,
    pub base: ClassicalSemantics,
    pub vacuity: ClassicalSemantics,
    pub description: &'static str,
    /// Other `(base, vacuity)` cells that denote the same semantics.
    pub known_equalities: &'static [(ClassicalSemantics, ClassicalSemantics)],
}

impl NamedEntry {
    pub fn definition(&self) -> SemanticsSpec {
        SemanticsSpec::vac(self.base.into(), self.vacuity.into())
    }
}

use ClassicalSemantics::{
    Admissible as Adm, Complete as Co, ConflictFree as Cf, Grounded as Gr, Ideal as Id,
    Naive as Na, Preferred as Pr, SemiStable as Sst, Stable as Stb,
};

macro_rules! entry {
    ($token:expr, $base:expr, $vac:expr, $desc:expr, [$(($b:expr, $v:expr)),*]) => {
        NamedEntry {
            token: $token,
            base: $base,
            vacuity: $vac,
            description: $desc,
            known_equalities: &[$(($b, $v)),*],
        }
    };
}

static REGISTRY: [NamedEntry; 21] = [
    entry!("ud", Cf, Adm, "undisputed semantics", [(Cf, Co), (Cf, Pr), (Cf, Sst)]),
    entry!("stb-cog", Cf, Cf, "cogent stable semantics", [(Cf, Na), (Na, Cf), (Na, Na)]),
    entry!("co-ub", Cf, Gr, "ub-complete semantics", []),
    entry!("adm-s1", Adm, Id, "admissible base, ideal vacuity", [(Co, Id)]),
    entry!("adm-s2", Adm, Stb, "admissible base, stable vacuity", []),
    entry!("adm-s3", Adm, Cf, "admissible base, conflict-free vacuity", [(Adm, Na), (Co, Cf), (Co, Na), (Pr, Cf), (Pr, Na)]),
    entry!("co-s1", Co, Stb, "complete base, stable vacuity", []),
    entry!("gr-s1", Gr, Adm, "grounded base, admissible vacuity", [(Gr, Co), (Gr, Pr), (Gr, Sst)]),
    entry!("gr-s2", Gr, Id, "grounded base, ideal vacuity", []),
    entry!("gr-s3", Gr, Stb, "grounded base, stable vacuity", []),
    entry!("gr-s4", Gr, Cf, "grounded base, conflict-free vacuity", [(Gr, Na)]),
    entry!("id-s1", Id, Adm, "ideal base, admissible vacuity", [(Id, Co), (Id, Pr), (Id, Sst)]),
    entry!("id-s2", Id, Stb, "ideal base, stable vacuity", []),
    entry!("id-s3", Id, Cf, "ideal base, conflict-free vacuity", [(Id, Na)]),
    entry!("sst-s1", Sst, Cf, "semi-stable base, conflict-free vacuity", [(Sst, Na)]),
    entry!("cf-s1", Cf, Id, "conflict-free base, ideal vacuity", []),
    entry!("cf-s2", Cf, Stb, "conflict-free base, stable vacuity", []),
    entry!("na-s1", Na, Adm, "naive base, admissible vacuity", [(Na, Co), (Na, Pr), (Na, Sst)]),
    entry!("na-s2", Na, Gr, "naive base, grounded vacuity", []),
    entry!("na-s3", Na, Id, "naive base, ideal vacuity", []),
    entry!("na-s4", Na, Stb, "naive base, stable vacuity", []),
];

pub fn registry() -> &'static [NamedEntry] {
    &REGISTRY
}

/// Looks up a registry name.
pub fn resolve(token: &str) -> Result<SemanticsSpec> {
    REGISTRY
        .iter()
        .find(|entry| entry.token == token)
        .map(NamedEntry::definition)
        .ok_or_else(|| Error::UnknownSemantics(token.to_string()))
}

/// Every token accepted on the command line, classical tokens first.
pub fn all_tokens() -> Vec<&'static str> {
    ClassicalSemantics::ALL
        .iter()
        .map(|s| s.token())
        .chain(REGISTRY.iter().map(|e| e.token))
        .collect()
}

/// Memoising evaluator for one framework.
///
/// Results are cached per (sub-frame, semantics), so reducts shared between
/// different extensions or different specs are evaluated once. Not `Sync`;
/// use one evaluator per worker.
pub struct Evaluator<'a> {
    af: &'a ArgumentationFramework,
    extensions: FnvHashMap<SemanticsSpec, FnvHashMap<ArgSet, Rc<ExtensionSet>>>,
    nonempty: FnvHashMap<SemanticsSpec, FnvHashMap<ArgSet, bool>>,
}

impl<'a> Evaluator<'a> {
    pub fn new(af: &'a ArgumentationFramework) -> Self {
        Evaluator {
            af,
            extensions: FnvHashMap::default(),
            nonempty: FnvHashMap::default(),
        }
    }

    pub fn framework(&self) -> &'a ArgumentationFramework {
        self.af
    }

    /// Extensions of `spec` on the whole framework.
    pub fn eval(&mut self, spec: &SemanticsSpec) -> Result<Rc<ExtensionSet>> {
        self.eval_on(self.af.arguments(), spec)
    }

    /// Extensions of `spec` on the restriction `F↓frame`, in root indices.
    pub fn eval_on(&mut self, frame: ArgSet, spec: &SemanticsSpec) -> Result<Rc<ExtensionSet>> {
        if !spec.is_resolved() {
            return self.eval_on(frame, &spec.resolved()?);
        }
        if let Some(hit) = self.extensions.get(spec).and_then(|m| m.get(&frame)) {
            return Ok(Rc::clone(hit));
        }
        let view = Frame::new(self.af, frame)?;
        let computed = match spec {
            SemanticsSpec::Classical(sem) => view.extensions(*sem)?,
            SemanticsSpec::Vac { base, vacuity } => {
                let candidates = self.eval_on(frame, base)?;
                let mut kept = Vec::with_capacity(candidates.len());
                for e in candidates.iter() {
                    if !self.has_nonempty_on(view.reduct(e), vacuity)? {
                        kept.push(e);
                    }
                }
                ExtensionSet::from(kept)
            }
            SemanticsSpec::Named(_) => unreachable!("resolved above"),
        };
        let computed = Rc::new(computed);
        self.extensions
            .entry(spec.clone())
            .or_default()
            .insert(frame, Rc::clone(&computed));
        Ok(computed)
    }

    /// Whether `spec` has a nonempty extension on `F↓frame`, stopping at the
    /// first witness where the semantics allows it.
    pub fn has_nonempty_on(&mut self, frame: ArgSet, spec: &SemanticsSpec) -> Result<bool> {
        if !spec.is_resolved() {
            return self.has_nonempty_on(frame, &spec.resolved()?);
        }
        if frame.is_empty() {
            return Ok(false);
        }
        if let Some(&hit) = self.nonempty.get(spec).and_then(|m| m.get(&frame)) {
            return Ok(hit);
        }
        if let Some(done) = self.extensions.get(spec).and_then(|m| m.get(&frame)) {
            return Ok(!done.is_vacuous());
        }
        let view = Frame::new(self.af, frame)?;
        let found = match spec {
            SemanticsSpec::Classical(sem) => view.has_nonempty(*sem)?,
            SemanticsSpec::Vac { base, vacuity } => {
                let candidates = self.eval_on(frame, base)?;
                let mut found = false;
                for e in candidates.iter().filter(|e| !e.is_empty()) {
                    if !self.has_nonempty_on(view.reduct(e), vacuity)? {
                        found = true;
                        break;
                    }
                }
                found
            }
            SemanticsSpec::Named(_) => unreachable!("resolved above"),
        };
        self.nonempty
            .entry(spec.clone())
            .or_default()
            .insert(frame, found);
        Ok(found)
    }

    /// `τ(F^E) ⊆ {∅}`, evaluated inside `F↓frame`.
    pub fn vacuity_holds_on(&mut self, frame: ArgSet, set: ArgSet, tau: &SemanticsSpec) -> Result<bool> {
        let view = Frame::new(self.af, frame)?;
        self.af.check_set(set)?;
        Ok(!self.has_nonempty_on(view.reduct(set), tau)?)
    }
}

/// `τ(F^E) ⊆ {∅}`
pub fn vacuity_holds(af: &ArgumentationFramework, set: ArgSet, tau: &SemanticsSpec) -> Result<bool> {
    Evaluator::new(af).vacuity_holds_on(af.arguments(), set, tau)
}

/// Extensions of any semantics spec; classical specs dispatch directly.
pub fn vac_extensions(af: &ArgumentationFramework, spec: &SemanticsSpec) -> Result<ExtensionSet> {
    Ok(Evaluator::new(af).eval(spec)?.as_ref().clone())
}
