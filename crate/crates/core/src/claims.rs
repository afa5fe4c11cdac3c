//! Registry of correspondence claims about vacuous reduct semantics, and the
//! engine that checks them framework by framework over a corpus.

use std::fmt;
use std::rc::Rc;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::af::{ArgSet, ArgumentationFramework, ExtensionSet};
use crate::enumeration::Corpus;
use crate::error::{Error, Result};
use crate::formats::write_apx;
use crate::semantics::{self, ClassicalSemantics, Frame};
use crate::vacuous::{Evaluator, SemanticsSpec};

use ClassicalSemantics::{
    Admissible as Adm, Complete as Co, ConflictFree as Cf, Grounded as Gr, Ideal as Id,
    Naive as Na, Preferred as Pr, SemiStable as Sst, Stable as Stb,
};

/// Extension sets computed without the combinator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Oracle {
    /// Stable extensions after deleting self-attackers.
    StbCogDirect,
    /// Conflict-free sets containing everything they defend.
    CoUbDirect,
    /// `stb(F) ∪ {E ∈ adm(F) | E ⊄ S for every S ∈ stb(F)}`
    Adm2Chara,
    /// `stb(F) ∪ {E ∈ co(F) | E ⊄ S for every S ∈ stb(F)}`
    Co1Chara,
}

impl Oracle {
    fn token(self) -> &'static str {
        match self {
            Oracle::StbCogDirect => "stb_cog_direct",
            Oracle::CoUbDirect => "co_ub_direct",
            Oracle::Adm2Chara => "adm2_chara",
            Oracle::Co1Chara => "co1_chara",
        }
    }

    fn eval(self, af: &ArgumentationFramework) -> Result<ExtensionSet> {
        let chara = |base: ExtensionSet| {
            let stb = Frame::whole(af).stable();
            let free = base.filter(|e| stb.iter().all(|s| !e.is_subset(s)));
            stb.iter().chain(free.iter()).collect()
        };
        match self {
            Oracle::StbCogDirect => semantics::stb_cog_direct(af),
            Oracle::CoUbDirect => semantics::co_ub_direct(af),
            Oracle::Adm2Chara => Ok(chara(Frame::whole(af).admissible())),
            Oracle::Co1Chara => Ok(chara(Frame::whole(af).complete())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Spec(SemanticsSpec),
    Oracle(Oracle),
}

impl Expr {
    fn eval(&self, ev: &mut Evaluator<'_>) -> Result<Rc<ExtensionSet>> {
        match self {
            Expr::Spec(spec) => ev.eval(spec),
            Expr::Oracle(oracle) => Ok(Rc::new(oracle.eval(ev.framework())?)),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Spec(spec) => write!(f, "{spec}"),
            Expr::Oracle(oracle) => f.write_str(oracle.token()),
        }
    }
}

fn c(sem: ClassicalSemantics) -> Expr {
    Expr::Spec(sem.into())
}

fn v(base: ClassicalSemantics, vacuity: ClassicalSemantics) -> Expr {
    Expr::Spec(SemanticsSpec::vac(base.into(), vacuity.into()))
}

fn named(token: &str) -> Expr {
    Expr::Spec(SemanticsSpec::Named(token.to_string()))
}

/// A per-framework condition inside an implication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cond {
    Equal(Expr, Expr),
    Subset(Expr, Expr),
    Empty(Expr),
    CountEq(Expr, usize),
    CountLe(Expr, usize),
    /// No extension of `outer` strictly contains an extension of `inner`.
    NoStrictSuperset { inner: Expr, outer: Expr },
    And(Vec<Cond>),
}

impl Cond {
    fn eval(&self, ev: &mut Evaluator<'_>) -> Result<bool> {
        Ok(match self {
            Cond::Equal(a, b) => a.eval(ev)? == b.eval(ev)?,
            Cond::Subset(a, b) => a.eval(ev)?.is_subset(&*b.eval(ev)?),
            Cond::Empty(a) => a.eval(ev)?.is_empty(),
            Cond::CountEq(a, k) => a.eval(ev)?.len() == *k,
            Cond::CountLe(a, k) => a.eval(ev)?.len() <= *k,
            Cond::NoStrictSuperset { inner, outer } => {
                let (inner, outer) = (inner.eval(ev)?, outer.eval(ev)?);
                inner.iter().all(|g| outer.iter().all(|e| !g.is_strict_subset(e)))
            }
            Cond::And(parts) => {
                for part in parts {
                    if !part.eval(ev)? {
                        return Ok(false);
                    }
                }
                true
            }
        })
    }
}

impl fmt::Display for Cond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cond::Equal(a, b) => write!(f, "{a} = {b}"),
            Cond::Subset(a, b) => write!(f, "{a} ⊆ {b}"),
            Cond::Empty(a) => write!(f, "{a} = ∅"),
            Cond::CountEq(a, k) => write!(f, "|{a}| = {k}"),
            Cond::CountLe(a, k) => write!(f, "|{a}| ≤ {k}"),
            Cond::NoStrictSuperset { inner, outer } => write!(f, "no {outer} extension ⊋ a {inner} extension"),
            Cond::And(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                f.write_str(&parts.join(" and "))
            }
        }
    }
}

/// Checks with a bespoke procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Custom {
    /// The ideal extension is contained in every `vac(adm, id)` extension.
    IdealInsideAdm1,
    /// Every `vac(adm, cf)` extension has a `vac(sst, cf)` extension whose
    /// reduct is a restriction of its own.
    SstLevels,
    /// Classical vacuity conditions with equal credulous unions on every
    /// reduct `F^E`, `E ∈ σ(F)`, give equal `vac(σ, ·)(F)`.
    CredulousVacuity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    /// All sides denote the same extensions.
    Equal(Vec<Expr>),
    Subset(Expr, Expr),
    Nonempty(Expr),
    /// Both implications are checked separately.
    Iff(Cond, Cond),
    Implies(Cond, Cond),
    OracleMatch(Expr, Oracle),
    Custom(Custom),
    All(Vec<Check>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimKind {
    Equality,
    Subset,
    Nonempty,
    Iff,
    Implies,
    OracleMatch,
    Custom,
    Conjunction,
}

impl Check {
    fn kind(&self) -> ClaimKind {
        match self {
            Check::Equal(_) => ClaimKind::Equality,
            Check::Subset(..) => ClaimKind::Subset,
            Check::Nonempty(_) => ClaimKind::Nonempty,
            Check::Iff(..) => ClaimKind::Iff,
            Check::Implies(..) => ClaimKind::Implies,
            Check::OracleMatch(..) => ClaimKind::OracleMatch,
            Check::Custom(_) => ClaimKind::Custom,
            Check::All(parts) => {
                let first = parts.first().map_or(ClaimKind::Conjunction, Check::kind);
                if parts.iter().all(|p| p.kind() == first) {
                    first
                } else {
                    ClaimKind::Conjunction
                }
            }
        }
    }

    /// `None` if the check passes on the evaluator's framework, otherwise a
    /// description of the failure.
    fn refute(&self, ev: &mut Evaluator<'_>) -> Result<Option<String>> {
        let af = ev.framework();
        match self {
            Check::Equal(sides) => {
                let Some((first, rest)) = sides.split_first() else {
                    return Ok(None);
                };
                let expected = first.eval(ev)?;
                for side in rest {
                    let got = side.eval(ev)?;
                    if got != expected {
                        return Ok(Some(format!(
                            "{first} = {} but {side} = {}",
                            show(af, &expected),
                            show(af, &got)
                        )));
                    }
                }
                Ok(None)
            }
            Check::Subset(a, b) => {
                let (left, right) = (a.eval(ev)?, b.eval(ev)?);
                Ok(left.iter().find(|e| !right.contains(*e)).map(|e| {
                    format!("{} ∈ {a} but ∉ {b} = {}", show_set(af, e), show(af, &right))
                }))
            }
            Check::Nonempty(a) => Ok(a.eval(ev)?.is_empty().then(|| format!("{a} has no extension"))),
            Check::Iff(l, r) => {
                let (lv, rv) = (l.eval(ev)?, r.eval(ev)?);
                Ok(match (lv, rv) {
                    (true, false) => Some(format!("⇒ fails: {l} holds but not {r}")),
                    (false, true) => Some(format!("⇐ fails: {r} holds but not {l}")),
                    _ => None,
                })
            }
            Check::Implies(l, r) => {
                Ok((l.eval(ev)? && !r.eval(ev)?).then(|| format!("{l} holds but not {r}")))
            }
            Check::OracleMatch(spec, oracle) => Check::Equal(vec![spec.clone(), Expr::Oracle(*oracle)]).refute(ev),
            Check::Custom(custom) => custom.refute(ev),
            Check::All(parts) => {
                for part in parts {
                    if let Some(detail) = part.refute(ev)? {
                        return Ok(Some(detail));
                    }
                }
                Ok(None)
            }
        }
    }
}

impl Custom {
    fn refute(self, ev: &mut Evaluator<'_>) -> Result<Option<String>> {
        let af = ev.framework();
        let frame = Frame::whole(af);
        match self {
            Custom::IdealInsideAdm1 => {
                let ideal = frame.ideal()?;
                let adm1 = v(Adm, Id).eval(ev)?;
                Ok(adm1.iter().find(|e| !ideal.is_subset(*e)).map(|e| {
                    format!("ideal {} ⊄ {} ∈ vac:adm:id", show_set(af, ideal), show_set(af, e))
                }))
            }
            Custom::SstLevels => {
                let adm3 = v(Adm, Cf).eval(ev)?;
                let sst1 = v(Sst, Cf).eval(ev)?;
                // Reducts are induced sub-frameworks of F, so argument-set
                // inclusion already makes one a restriction of the other.
                Ok(adm3
                    .iter()
                    .find(|&e| !sst1.iter().any(|s| frame.reduct(s).is_subset(frame.reduct(e))))
                    .map(|e| format!("no vac:sst:cf extension has a reduct inside that of {}", show_set(af, e))))
            }
            Custom::CredulousVacuity => {
                // The antecedent ranges over every framework whose extensions
                // decide vacuity here: the reducts F^E for E ∈ σ(F).
                for base in ClassicalSemantics::ALL {
                    let reducts: Vec<ArgSet> = ev.eval(&base.into())?.iter().map(|e| frame.reduct(e)).collect();
                    let mut unions = Vec::with_capacity(ClassicalSemantics::ALL.len());
                    for tau in ClassicalSemantics::ALL {
                        let mut per_reduct = Vec::with_capacity(reducts.len());
                        for &r in &reducts {
                            per_reduct.push(ev.eval_on(r, &tau.into())?.credulous());
                        }
                        unions.push((tau, per_reduct));
                    }
                    for (i, (tau, union)) in unions.iter().enumerate() {
                        for (tau2, _) in unions[i + 1..].iter().filter(|(_, u)| u == union) {
                            let check = Check::Equal(vec![v(base, *tau), v(base, *tau2)]);
                            if let Some(detail) = check.refute(ev)? {
                                return Ok(Some(format!(
                                    "{tau} and {tau2} agree credulously on every {base} reduct, yet {detail}"
                                )));
                            }
                        }
                    }
                }
                Ok(None)
            }
        }
    }
}

fn show_set(af: &ArgumentationFramework, set: ArgSet) -> String {
    format!("{{{}}}", af.set_names(set).join(","))
}

fn show(af: &ArgumentationFramework, exts: &ExtensionSet) -> String {
    let inner: Vec<String> = exts.iter().map(|e| show_set(af, e)).collect();
    format!("{{{}}}", inner.join(","))
}

#[derive(Clone, Debug)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    pub check: Check,
}

impl Claim {
    pub fn kind(&self) -> ClaimKind {
        self.check.kind()
    }

    /// A failure description if `af` refutes the claim.
    pub fn refute(&self, af: &ArgumentationFramework) -> Result<Option<String>> {
        self.check.refute(&mut Evaluator::new(af))
    }

    pub fn refute_with(&self, ev: &mut Evaluator<'_>) -> Result<Option<String>> {
        self.check.refute(ev)
    }
}

/// Row semantics of the table, in order.
pub const TABLE_ROWS: [ClassicalSemantics; 9] = [Adm, Co, Pr, Gr, Id, Stb, Sst, Cf, Na];
/// Column semantics of the table, in order.
pub const TABLE_COLUMNS: [ClassicalSemantics; 6] = [Adm, Gr, Id, Stb, Sst, Cf];

const TABLE: [[&str; 6]; 9] = [
    ["pr", "co", "adm-s1", "adm-s2", "pr", "adm-s3"],
    ["pr", "co", "adm-s1", "co-s1", "pr", "adm-s3"],
    ["pr", "pr", "pr", "pr", "pr", "adm-s3"],
    ["gr-s1", "gr", "gr-s2", "gr-s3", "gr-s1", "gr-s4"],
    ["id-s1", "id", "id", "id-s2", "id-s1", "id-s3"],
    ["stb", "stb", "stb", "stb", "stb", "stb"],
    ["sst", "sst", "sst", "sst", "sst", "sst-s1"],
    ["ud", "co-ub", "cf-s1", "cf-s2", "ud", "stb-cog"],
    ["na-s1", "na-s2", "na-s3", "na-s4", "na-s1", "stb-cog"],
];

/// The table entry for `vac(row, column)`, as written in the table.
pub fn table_cell(row: ClassicalSemantics, column: ClassicalSemantics) -> Option<&'static str> {
    let r = TABLE_ROWS.iter().position(|&s| s == row)?;
    let c = TABLE_COLUMNS.iter().position(|&s| s == column)?;
    Some(TABLE[r][c])
}

fn cell_check(row: ClassicalSemantics, column: ClassicalSemantics, cell: &str) -> Check {
    let lhs = v(row, column);
    match cell {
        "co-ub" => Check::OracleMatch(lhs, Oracle::CoUbDirect),
        "stb-cog" => Check::OracleMatch(lhs, Oracle::StbCogDirect),
        token => match token.parse::<ClassicalSemantics>() {
            Ok(sem) => Check::Equal(vec![lhs, c(sem)]),
            Err(_) => Check::Equal(vec![lhs, named(token)]),
        },
    }
}

fn claim(id: &str, statement: &str, check: Check) -> Claim {
    Claim {
        id: id.to_string(),
        statement: statement.to_string(),
        check,
    }
}

fn build_registry() -> Vec<Claim> {
    let mut claims = Vec::new();
    for (r, &row) in TABLE_ROWS.iter().enumerate() {
        for (k, &col) in TABLE_COLUMNS.iter().enumerate() {
            let cell = TABLE[r][k];
            claims.push(claim(
                &format!("T1:{row}:{col}"),
                &format!("vac({row},{col}) = {cell}"),
                cell_check(row, col, cell),
            ));
        }
    }

    let iff_each = |sems: &[ClassicalSemantics], base: ClassicalSemantics, rhs: Cond| {
        Check::All(
            sems.iter()
                .map(|&s| Check::Iff(Cond::Equal(v(base, s), c(base)), rhs.clone()))
                .collect(),
        )
    };
    let adm_like = [Adm, Co, Pr, Sst];
    let cf_like = [Cf, Na];

    claims.extend([
        claim(
            "COL-EQ",
            "vac(σ,cf) = vac(σ,na) and vac(σ,adm) = vac(σ,co) = vac(σ,pr) for every row σ",
            Check::All(
                TABLE_ROWS
                    .iter()
                    .flat_map(|&s| {
                        [
                            Check::Equal(vec![v(s, Cf), v(s, Na)]),
                            Check::Equal(vec![v(s, Adm), v(s, Co), v(s, Pr)]),
                        ]
                    })
                    .collect(),
            ),
        ),
        claim(
            "SST-EQ",
            "vac(σ,sst) = vac(σ,adm) for every row σ",
            Check::All(TABLE_ROWS.iter().map(|&s| Check::Equal(vec![v(s, Sst), v(s, Adm)])).collect()),
        ),
        claim(
            "ADM1-BOUNDS",
            "pr ⊆ vac(adm,id) ⊆ co, id ⊆ vac(adm,id), and the ideal extension lies inside every vac(adm,id) extension",
            Check::All(vec![
                Check::Subset(c(Pr), v(Adm, Id)),
                Check::Subset(v(Adm, Id), c(Co)),
                Check::Subset(c(Id), v(Adm, Id)),
                Check::Custom(Custom::IdealInsideAdm1),
            ]),
        ),
        claim("ADM2-EXIST", "vac(adm,stb)(F) ≠ ∅", Check::Nonempty(v(Adm, Stb))),
        claim(
            "ADM2-CHARA",
            "vac(adm,stb)(F) = stb(F) ∪ {E ∈ adm(F) | E ⊄ S for all S ∈ stb(F)}",
            Check::OracleMatch(v(Adm, Stb), Oracle::Adm2Chara),
        ),
        claim(
            "ADM2-EMPTY",
            "stb(F) = ∅ implies vac(adm,stb)(F) = adm(F)",
            Check::Implies(Cond::Empty(c(Stb)), Cond::Equal(v(Adm, Stb), c(Adm))),
        ),
        claim(
            "CO1-CHARA",
            "vac(co,stb)(F) = stb(F) ∪ {E ∈ co(F) | E ⊄ S for all S ∈ stb(F)}",
            Check::OracleMatch(v(Co, Stb), Oracle::Co1Chara),
        ),
        claim("CO1-SUB", "vac(co,stb) ⊆ vac(adm,stb)", Check::Subset(v(Co, Stb), v(Adm, Stb))),
        claim(
            "ADM3-EQ",
            "vac(co,σ) = vac(pr,σ) = vac(adm,σ) for σ ∈ {cf,na}",
            Check::All(
                cf_like
                    .iter()
                    .map(|&s| Check::Equal(vec![v(Adm, s), v(Co, s), v(Pr, s)]))
                    .collect(),
            ),
        ),
        claim("CO-ID-EQ", "vac(co,id) = vac(adm,id)", Check::Equal(vec![v(Co, Id), v(Adm, Id)])),
        claim("GR-SELF", "vac(gr,gr) = gr", Check::Equal(vec![v(Gr, Gr), c(Gr)])),
        claim(
            "GR-ADM-IFF",
            "vac(gr,σ)(F) = gr(F) iff gr(F) = pr(F), for σ ∈ {adm,co,pr,sst}",
            iff_each(&adm_like, Gr, Cond::Equal(c(Gr), c(Pr))),
        ),
        claim(
            "GR-STB-IFF",
            "vac(gr,stb)(F) = gr(F) iff no stable extension strictly contains the grounded extension",
            iff_each(&[Stb], Gr, Cond::NoStrictSuperset { inner: c(Gr), outer: c(Stb) }),
        ),
        claim(
            "GR-ID-IFF",
            "vac(gr,id)(F) = gr(F) iff gr(F) = id(F)",
            iff_each(&[Id], Gr, Cond::Equal(c(Gr), c(Id))),
        ),
        claim(
            "GR-CF-IFF",
            "vac(gr,σ)(F) = gr(F) iff gr(F) ⊆ vac(cf,cf)(F), for σ ∈ {cf,na}",
            iff_each(&cf_like, Gr, Cond::Subset(c(Gr), v(Cf, Cf))),
        ),
        claim(
            "ID-GRID",
            "vac(id,gr) = id and vac(id,id) = id",
            Check::All(vec![
                Check::Equal(vec![v(Id, Gr), c(Id)]),
                Check::Equal(vec![v(Id, Id), c(Id)]),
            ]),
        ),
        claim(
            "ID-ADM-IFF",
            "vac(id,σ)(F) = id(F) iff |pr(F)| = 1, for σ ∈ {adm,co,pr,sst}",
            iff_each(&adm_like, Id, Cond::CountEq(c(Pr), 1)),
        ),
        claim(
            "ID-STB-IFF",
            "vac(id,stb)(F) = id(F) iff |stb(F)| ≤ 1",
            iff_each(&[Stb], Id, Cond::CountLe(c(Stb), 1)),
        ),
        claim(
            "ID-CF-IFF",
            "vac(id,σ)(F) = id(F) iff |pr(F)| = 1 and pr(F) ⊆ vac(adm,cf)(F), for σ ∈ {cf,na}",
            iff_each(
                &cf_like,
                Id,
                Cond::And(vec![Cond::CountEq(c(Pr), 1), Cond::Subset(c(Pr), v(Adm, Cf))]),
            ),
        ),
        claim("CF-SST", "vac(cf,sst) = vac(cf,adm)", Check::Equal(vec![v(Cf, Sst), v(Cf, Adm)])),
        claim(
            "CF-CHAIN",
            "vac(cf,adm) ⊆ vac(cf,id) ⊆ vac(cf,gr)",
            Check::All(vec![
                Check::Subset(v(Cf, Adm), v(Cf, Id)),
                Check::Subset(v(Cf, Id), v(Cf, Gr)),
            ]),
        ),
        claim(
            "NA-CF-EQ",
            "vac(na,σ) = vac(cf,σ) for σ ∈ {cf,na}",
            Check::All(cf_like.iter().map(|&s| Check::Equal(vec![v(Na, s), v(Cf, s)])).collect()),
        ),
        claim(
            "ORACLE-COG",
            "vac(cf,cf)(F) = stb(F↓(A ∖ self-attackers))",
            Check::OracleMatch(v(Cf, Cf), Oracle::StbCogDirect),
        ),
        claim(
            "ORACLE-UB",
            "vac(cf,gr)(F) = {E ∈ cf(F) | Γ(E) ⊆ E}",
            Check::OracleMatch(v(Cf, Gr), Oracle::CoUbDirect),
        ),
        claim(
            "SST-LEVELS",
            "every E ∈ vac(adm,cf)(F) has some E′ ∈ vac(sst,cf)(F) with F^E′ a restriction of F^E",
            Check::Custom(Custom::SstLevels),
        ),
        claim(
            "SST-EMPTYEQ",
            "vac(sst,σ)(F) = ∅ iff vac(adm,σ)(F) = ∅, for σ ∈ {cf,na}",
            Check::All(
                cf_like
                    .iter()
                    .map(|&s| Check::Iff(Cond::Empty(v(Sst, s)), Cond::Empty(v(Adm, s))))
                    .collect(),
            ),
        ),
        claim(
            "CRED-EQ",
            "classical τ, τ′ with equal credulous unions on every reduct F^E, E ∈ σ(F), give vac(σ,τ)(F) = vac(σ,τ′)(F)",
            Check::Custom(Custom::CredulousVacuity),
        ),
    ]);
    claims
}

/// Every claim, table cells first.
pub fn registry() -> &'static [Claim] {
    static REGISTRY: OnceLock<Vec<Claim>> = OnceLock::new();
    REGISTRY.get_or_init(build_registry)
}

pub fn find(id: &str) -> Result<&'static Claim> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// True iff `vac(adm, id)` differs on `af` from the admissible sets that
/// contain the ideal extension.
pub fn adm1_differs_from_ideal_closure(af: &ArgumentationFramework) -> Result<bool> {
    let frame = Frame::whole(af);
    let ideal = frame.ideal()?;
    let closure = frame.admissible().filter(|e| ideal.is_subset(e));
    let adm1 = Evaluator::new(af).eval(&SemanticsSpec::vac(Adm.into(), Id.into()))?;
    Ok(*adm1 != closure)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimOutcome {
    Confirmed,
    Refuted {
        index: usize,
        framework: ArgumentationFramework,
        detail: String,
    },
}

#[derive(Clone, Debug)]
pub struct ClaimReport {
    pub id: String,
    pub corpus: String,
    pub afs_checked: usize,
    pub outcome: ClaimOutcome,
    pub wall_time: Duration,
}

impl ClaimReport {
    pub fn confirmed(&self) -> bool {
        self.outcome == ClaimOutcome::Confirmed
    }

    /// Re-checks a refutation on its own framework.
    pub fn replay(&self) -> Result<bool> {
        match &self.outcome {
            ClaimOutcome::Confirmed => Ok(true),
            ClaimOutcome::Refuted { framework, .. } => Ok(find(&self.id)?.refute(framework)?.is_some()),
        }
    }

    /// Everything except the wall time, so reports compare across runs.
    pub fn to_json(&self) -> Value {
        let outcome = match &self.outcome {
            ClaimOutcome::Confirmed => json!({"status": "confirmed"}),
            ClaimOutcome::Refuted { index, framework, detail } => json!({
                "status": "refuted",
                "index": index,
                "af": write_apx(framework),
                "detail": detail,
            }),
        };
        json!({
            "claim": self.id,
            "corpus": self.corpus,
            "afs_checked": self.afs_checked,
            "outcome": outcome,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Summary {
    pub corpus: String,
    pub afs: usize,
    pub reports: Vec<ClaimReport>,
    pub warnings: Vec<String>,
}

impl Summary {
    pub fn confirmed(&self) -> usize {
        self.reports.iter().filter(|r| r.confirmed()).count()
    }

    pub fn refuted(&self) -> usize {
        self.reports.len() - self.confirmed()
    }

    pub fn slowest(&self, k: usize) -> Vec<&ClaimReport> {
        let mut by_time: Vec<&ClaimReport> = self.reports.iter().collect();
        by_time.sort_by(|a, b| b.wall_time.cmp(&a.wall_time).then_with(|| a.id.cmp(&b.id)));
        by_time.truncate(k);
        by_time
    }

    pub fn to_json(&self) -> Value {
        json!({
            "corpus": self.corpus,
            "afs": self.afs,
            "confirmed": self.confirmed(),
            "refuted": self.refuted(),
            "warnings": self.warnings,
            "claims": self.reports.iter().map(ClaimReport::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn table(&self) -> String {
        let width = self.reports.iter().map(|r| r.id.len()).max().unwrap_or(5).max(5);
        let mut out = format!("{:<width$}  {:>9}  {:>10}  outcome\n", "claim", "afs", "time (ms)");
        for r in &self.reports {
            let outcome = match &r.outcome {
                ClaimOutcome::Confirmed => "confirmed".to_string(),
                ClaimOutcome::Refuted { index, detail, .. } => format!("REFUTED at #{index}: {detail}"),
            };
            out.push_str(&format!(
                "{:<width$}  {:>9}  {:>10.1}  {outcome}\n",
                r.id,
                r.afs_checked,
                r.wall_time.as_secs_f64() * 1e3
            ));
        }
        out.push_str(&format!(
            "{} confirmed, {} refuted over {} frameworks ({})\n",
            self.confirmed(),
            self.refuted(),
            self.afs,
            self.corpus
        ));
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

#[derive(Clone)]
struct Partial {
    // Least refuting index and detail per claim.
    refutations: Vec<Option<(usize, String)>>,
    times: Vec<Duration>,
    error: Option<(usize, Error)>,
}

impl Partial {
    fn new(claims: usize) -> Self {
        Partial {
            refutations: vec![None; claims],
            times: vec![Duration::ZERO; claims],
            error: None,
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        for (mine, theirs) in self.refutations.iter_mut().zip(other.refutations) {
            if let Some(t) = theirs {
                if mine.as_ref().is_none_or(|m| t.0 < m.0) {
                    *mine = Some(t);
                }
            }
        }
        for (mine, theirs) in self.times.iter_mut().zip(other.times) {
            *mine += theirs;
        }
        if let Some(e) = other.error {
            if self.error.as_ref().is_none_or(|m| e.0 < m.0) {
                self.error = Some(e);
            }
        }
        self
    }
}

/// Checks `claims` on every framework of `corpus`. Each worker shares one
/// evaluator across all claims of a framework; each claim reports its least
/// refuting corpus index, so results do not depend on scheduling.
pub fn verify_claims(claims: &[&Claim], corpus: &Corpus) -> Result<Summary> {
    let total = corpus.len();
    let partial = (0..total)
        .into_par_iter()
        .fold(
            || Partial::new(claims.len()),
            |mut acc, index| {
                if acc.error.is_some() {
                    return acc;
                }
                let af = corpus.get(index).expect("index within corpus");
                let mut ev = Evaluator::new(&af);
                for (k, claim) in claims.iter().enumerate() {
                    if acc.refutations[k].as_ref().is_some_and(|(i, _)| *i < index) {
                        continue;
                    }
                    let start = Instant::now();
                    let result = claim.refute_with(&mut ev);
                    acc.times[k] += start.elapsed();
                    match result {
                        Ok(Some(detail)) => acc.refutations[k] = Some((index, detail)),
                        Ok(None) => {}
                        Err(e) => {
                            acc.error = Some((index, e));
                            return acc;
                        }
                    }
                }
                acc
            },
        )
        .reduce(|| Partial::new(claims.len()), Partial::merge);

    if let Some((_, e)) = partial.error {
        return Err(e);
    }
    let corpus_name = corpus.describe();
    let reports = claims
        .iter()
        .zip(partial.refutations)
        .zip(partial.times)
        .map(|((claim, refutation), wall_time)| {
            let (afs_checked, outcome) = match refutation {
                None => (total, ClaimOutcome::Confirmed),
                Some((index, detail)) => (
                    index + 1,
                    ClaimOutcome::Refuted {
                        index,
                        framework: corpus.get(index).expect("index within corpus"),
                        detail,
                    },
                ),
            };
            ClaimReport {
                id: claim.id.clone(),
                corpus: corpus_name.clone(),
                afs_checked,
                outcome,
                wall_time,
            }
        })
        .collect();
    let mut warnings = Vec::new();
    if total == 0 {
        warnings.push("empty corpus: every claim is confirmed vacuously (afs_checked = 0)".to_string());
    }
    Ok(Summary {
        corpus: corpus_name,
        afs: total,
        reports,
        warnings,
    })
}

pub fn verify(claim: &Claim, corpus: &Corpus) -> Result<ClaimReport> {
    let mut summary = verify_claims(&[claim], corpus)?;
    Ok(summary.reports.remove(0))
}

pub fn verify_all(corpus: &Corpus) -> Result<Summary> {
    let claims: Vec<&Claim> = registry().iter().collect();
    verify_claims(&claims, corpus)
}

/// Runs `f` on a pool of `jobs` workers; `None` uses the global pool.
pub fn with_workers<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Error::Invariant(format!("cannot start worker pool: {e}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::fixtures::*;
    use crate::enumeration::CorpusSpec;

    fn exhaustive(range: std::ops::RangeInclusive<usize>) -> Corpus {
        Corpus::new(range.map(CorpusSpec::exhaustive)).unwrap()
    }

    #[test]
    fn registry_shape() {
        let claims = registry();
        assert_eq!(claims.iter().filter(|c| c.id.starts_with("T1:")).count(), 54);
        assert_eq!(find("ADM2-EXIST").unwrap().kind(), ClaimKind::Nonempty);
        assert_eq!(find("T1:cf:cf").unwrap().kind(), ClaimKind::OracleMatch);
        assert_eq!(find("GR-ADM-IFF").unwrap().kind(), ClaimKind::Iff);
        assert!(find("T1:adm:na").is_err());
        let mut ids: Vec<&str> = claims.iter().map(|c| c.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), claims.len());
        assert!(claims.iter().all(|c| !c.statement.is_empty()));
    }

    #[test]
    fn table_lookup() {
        assert_eq!(table_cell(Adm, Gr), Some("co"));
        assert_eq!(table_cell(Na, Cf), Some("stb-cog"));
        assert_eq!(table_cell(Adm, Na), None);
    }

    #[test]
    fn single_cell_on_three_arguments() {
        let report = verify(find("T1:adm:adm").unwrap(), &exhaustive(3..=3)).unwrap();
        assert!(report.confirmed());
        assert_eq!(report.afs_checked, 512);
    }

    #[test]
    fn characterisation_on_f3() {
        let f3 = f3();
        let claim = find("ADM2-CHARA").unwrap();
        assert_eq!(claim.refute(&f3).unwrap(), None);
        let e = f3.set_of(&["e"]).unwrap();
        let combinator = crate::vacuous::vac_extensions(&f3, &SemanticsSpec::vac(Adm.into(), Stb.into())).unwrap();
        let oracle = Oracle::Adm2Chara.eval(&f3).unwrap();
        assert_eq!(combinator, oracle);
        // {e} is admissible only together with its defender d.
        assert!(!combinator.contains(e));
        let cf_stb = crate::vacuous::vac_extensions(&f3, &SemanticsSpec::vac(Cf.into(), Stb.into())).unwrap();
        assert!(cf_stb.contains(e));
    }

    #[test]
    fn false_claim_is_refuted_with_replay() {
        let bogus = claim("BOGUS", "vac(cf,adm) = pr", Check::Equal(vec![v(Cf, Adm), c(Pr)]));
        let report = verify(&bogus, &exhaustive(2..=2)).unwrap();
        let ClaimOutcome::Refuted { framework, .. } = &report.outcome else {
            panic!("not refuted");
        };
        assert_eq!(framework.len(), 2);
        assert!(bogus.refute(framework).unwrap().is_some());
        assert!(bogus.refute(&f5()).unwrap().is_some());
    }

    #[test]
    fn iff_reports_the_broken_direction() {
        let forward = Check::Iff(Cond::Equal(c(Gr), c(Gr)), Cond::Empty(c(Gr)));
        let detail = forward.refute(&mut Evaluator::new(&f6())).unwrap().unwrap();
        assert!(detail.starts_with("⇒"), "{detail}");
        let backward = Check::Iff(Cond::Empty(c(Gr)), Cond::Equal(c(Gr), c(Gr)));
        let detail = backward.refute(&mut Evaluator::new(&f6())).unwrap().unwrap();
        assert!(detail.starts_with("⇐"), "{detail}");
    }

    #[test]
    fn f4_separates_adm1_from_ideal_closure() {
        let f4 = f4();
        let b = f4.set_of(&["b"]).unwrap();
        let reduct = f4.reduct(b).unwrap();
        let ideal = reduct.lift(Frame::whole(&reduct.framework).ideal().unwrap());
        assert_eq!(ideal, f4.set_of(&["c"]).unwrap());
        let adm1 = crate::vacuous::vac_extensions(&f4, &SemanticsSpec::vac(Adm.into(), Id.into())).unwrap();
        assert!(Frame::whole(&f4).is_admissible(b));
        assert!(!adm1.contains(b));
        assert!(adm1_differs_from_ideal_closure(&f4).unwrap());
    }

    #[test]
    fn everything_but_the_stable_ideal_criterion_holds_up_to_three_arguments() {
        let summary = verify_all(&exhaustive(0..=3)).unwrap();
        for r in summary.reports.iter().filter(|r| r.id != "ID-STB-IFF") {
            assert!(r.confirmed(), "{}: {:?}", r.id, r.outcome);
        }
        assert_eq!(summary.afs, 1 + 2 + 16 + 512);
        let broken = summary.reports.iter().find(|r| r.id == "ID-STB-IFF").unwrap();
        let ClaimOutcome::Refuted { framework, detail, .. } = &broken.outcome else {
            panic!("ID-STB-IFF confirmed");
        };
        assert!(detail.starts_with("⇐"), "{detail}");
        assert!(broken.replay().unwrap());
        assert_eq!(framework.len(), 3);
    }

    #[test]
    fn credulous_agreement_on_f_alone_is_not_enough() {
        // stb and sst agree credulously on F but not on the reduct of {c}.
        let af = ArgumentationFramework::from_names(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("b", "b"), ("c", "a")],
        )
        .unwrap();
        let cred = |s| semantics::credulous_union(&af, s).unwrap();
        assert_eq!(cred(Stb), cred(Sst));
        let mut ev = Evaluator::new(&af);
        let literal = Check::Equal(vec![v(Cf, Stb), v(Cf, Sst)]);
        assert!(literal.refute(&mut ev).unwrap().is_some());
        assert_eq!(find("CRED-EQ").unwrap().refute(&af).unwrap(), None);
    }

    #[test]
    fn single_stable_extension_need_not_be_ideal() {
        // a and c attack each other, a also attacks the self-attacking b.
        // {a} is the only stable extension, but {c} is preferred too, so the
        // ideal extension is empty and its reduct keeps {a} as stable.
        let af = ArgumentationFramework::from_names(
            &["a", "b", "c"],
            &[("a", "b"), ("a", "c"), ("b", "b"), ("c", "a")],
        )
        .unwrap();
        let frame = Frame::whole(&af);
        assert_eq!(frame.stable().as_slice(), &[af.set_of(&["a"]).unwrap()]);
        assert_eq!(frame.preferred().len(), 2);
        assert_eq!(frame.ideal().unwrap(), ArgSet::EMPTY);
        let id_stb = crate::vacuous::vac_extensions(&af, &SemanticsSpec::vac(Id.into(), Stb.into())).unwrap();
        assert!(id_stb.is_empty());
        assert!(find("ID-STB-IFF").unwrap().refute(&af).unwrap().is_some());
    }

    #[test]
    fn empty_corpus_warns() {
        let summary = verify_all(&Corpus::empty()).unwrap();
        assert_eq!(summary.refuted(), 0);
        assert!(summary.reports.iter().all(|r| r.afs_checked == 0));
        assert_eq!(summary.warnings.len(), 1);
    }

    #[test]
    fn iso_reduction_preserves_verdicts() {
        let full = verify_all(&exhaustive(3..=3)).unwrap();
        let reduced = verify_all(&Corpus::new([CorpusSpec::exhaustive(3).iso_reduced()]).unwrap()).unwrap();
        let verdicts = |s: &Summary| s.reports.iter().map(|r| r.confirmed()).collect::<Vec<_>>();
        assert_eq!(verdicts(&full), verdicts(&reduced));
    }

    #[test]
    fn report_independent_of_worker_count() {
        let bogus = claim("BOGUS", "vac(cf,adm) = pr", Check::Equal(vec![v(Cf, Adm), c(Pr)]));
        let corpus = exhaustive(1..=3);
        let run = |jobs| {
            with_workers(Some(jobs), || verify(&bogus, &corpus).unwrap().to_json()).unwrap()
        };
        assert_eq!(run(1), run(4));
    }
}
