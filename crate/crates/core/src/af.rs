//! Argumentation frameworks, argument sets and the graph operations the
//! semantics are built from.

use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use crate::error::{Error, Result};

/// Maximum number of arguments in a single framework.
pub const MAX_ARGUMENTS: usize = 64;

/// A set of argument indices of one framework, stored as a 64-bit mask.
///
/// The [`Ord`] implementation is the canonical extension order: ascending
/// cardinality, then lexicographic by sorted member indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ArgSet(u64);

impl ArgSet {
    pub const EMPTY: ArgSet = ArgSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ArgSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ARGUMENTS);
        if n >= 64 {
            ArgSet(u64::MAX)
        } else {
            ArgSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(index: usize) -> Self {
        debug_assert!(index < MAX_ARGUMENTS);
        ArgSet(1u64 << index)
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        index < MAX_ARGUMENTS && self.0 & (1u64 << index) != 0
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1u64 << index;
    }

    pub fn remove(&mut self, index: usize) {
        self.0 &= !(1u64 << index);
    }

    pub const fn with(self, index: usize) -> Self {
        ArgSet(self.0 | (1u64 << index))
    }

    pub const fn is_subset(self, other: ArgSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_strict_subset(self, other: ArgSet) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    pub const fn is_disjoint(self, other: ArgSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Largest member index plus one, or zero for the empty set.
    pub const fn bound(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Iterator over the members of an [`ArgSet`] in ascending order.
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let index = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(index)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for ArgSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for ArgSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = ArgSet::EMPTY;
        for i in iter {
            set.insert(i);
        }
        set
    }
}

impl BitOr for ArgSet {
    type Output = ArgSet;
    fn bitor(self, rhs: ArgSet) -> ArgSet {
        ArgSet(self.0 | rhs.0)
    }
}

impl BitAnd for ArgSet {
    type Output = ArgSet;
    fn bitand(self, rhs: ArgSet) -> ArgSet {
        ArgSet(self.0 & rhs.0)
    }
}

impl Sub for ArgSet {
    type Output = ArgSet;
    fn sub(self, rhs: ArgSet) -> ArgSet {
        ArgSet(self.0 & !rhs.0)
    }
}

impl Not for ArgSet {
    type Output = ArgSet;
    fn not(self) -> ArgSet {
        ArgSet(!self.0)
    }
}

impl Ord for ArgSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // Equal cardinality: whoever owns the lowest differing index
                // has the smaller member at the first differing position.
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for ArgSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A deduplicated collection of argument sets in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExtensionSet(Vec<ArgSet>);

impl ExtensionSet {
    pub fn new() -> Self {
        ExtensionSet(Vec::new())
    }

    /// `{∅}`
    pub fn only_empty() -> Self {
        ExtensionSet(vec![ArgSet::EMPTY])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, set: ArgSet) -> bool {
        self.0.binary_search(&set).is_ok()
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, ArgSet>> {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[ArgSet] {
        &self.0
    }

    /// True iff every extension is the empty set (`σ(F) ⊆ {∅}`).
    pub fn is_vacuous(&self) -> bool {
        self.0.iter().all(|e| e.is_empty())
    }

    pub fn is_subset(&self, other: &ExtensionSet) -> bool {
        self.iter().all(|e| other.contains(e))
    }

    /// Union of all members of all extensions.
    pub fn credulous(&self) -> ArgSet {
        self.iter().fold(ArgSet::EMPTY, |acc, e| acc | e)
    }

    pub fn map<F: FnMut(ArgSet) -> ArgSet>(&self, f: F) -> ExtensionSet {
        self.iter().map(f).collect()
    }

    pub fn filter<F: FnMut(ArgSet) -> bool>(&self, mut f: F) -> ExtensionSet {
        ExtensionSet(self.iter().filter(|&e| f(e)).collect())
    }

    /// Members that are `⊆`-maximal within the collection.
    pub fn maximal(&self) -> ExtensionSet {
        self.filter(|e| !self.iter().any(|d| e.is_strict_subset(d)))
    }

    pub fn into_vec(self) -> Vec<ArgSet> {
        self.0
    }
}

impl FromIterator<ArgSet> for ExtensionSet {
    fn from_iter<I: IntoIterator<Item = ArgSet>>(iter: I) -> Self {
        let mut sets: Vec<ArgSet> = iter.into_iter().collect();
        sets.sort_unstable();
        sets.dedup();
        ExtensionSet(sets)
    }
}

impl From<Vec<ArgSet>> for ExtensionSet {
    fn from(sets: Vec<ArgSet>) -> Self {
        sets.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a ExtensionSet {
    type Item = ArgSet;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, ArgSet>>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

impl fmt::Debug for ExtensionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// A finite argumentation framework `⟨A, R⟩` over dense indices `0..n`.
///
/// Attacks are stored twice, as outgoing and incoming neighbour masks, so
/// `E⁺` and `E⁻` are a fold over the members of `E`.
#[derive(Clone)]
pub struct ArgumentationFramework {
    len: usize,
    outgoing: Vec<ArgSet>,
    incoming: Vec<ArgSet>,
    labels: Option<Vec<String>>,
}

/// The result of [`ArgumentationFramework::restrict`]: the induced framework
/// and, for each of its arguments, the index of that argument in the parent.
#[derive(Clone, Debug, PartialEq)]
pub struct Restriction {
    pub framework: ArgumentationFramework,
    pub to_parent: Vec<usize>,
}

impl Restriction {
    /// Maps a set over the restricted framework back to parent indices.
    pub fn lift(&self, set: ArgSet) -> ArgSet {
        set.iter().map(|i| self.to_parent[i]).collect()
    }

    pub fn lift_all(&self, sets: &ExtensionSet) -> ExtensionSet {
        sets.map(|s| self.lift(s))
    }
}

fn default_name(index: usize) -> Cow<'static, str> {
    const LETTERS: &str = "abcdefghijklmnopqrstuvwxyz";
    if index < LETTERS.len() {
        Cow::Borrowed(&LETTERS[index..=index])
    } else {
        Cow::Owned(format!("a{index}"))
    }
}

impl ArgumentationFramework {
    /// An unlabelled framework with `len` arguments and no attacks.
    pub fn new(len: usize) -> Result<Self> {
        if len > MAX_ARGUMENTS {
            return Err(Error::TooLarge {
                requested: len,
                limit: MAX_ARGUMENTS,
            });
        }
        Ok(ArgumentationFramework {
            len,
            outgoing: vec![ArgSet::EMPTY; len],
            incoming: vec![ArgSet::EMPTY; len],
            labels: None,
        })
    }

    pub fn empty() -> Self {
        ArgumentationFramework {
            len: 0,
            outgoing: Vec::new(),
            incoming: Vec::new(),
            labels: None,
        }
    }

    pub fn from_attacks<I>(len: usize, attacks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut af = Self::new(len)?;
        for (from, to) in attacks {
            af.add_attack(from, to)?;
        }
        Ok(af)
    }

    /// Builds a labelled framework; argument order fixes the indices.
    pub fn from_names(arguments: &[&str], attacks: &[(&str, &str)]) -> Result<Self> {
        let mut af = Self::new(arguments.len())?;
        af.set_labels(arguments.iter().map(|s| s.to_string()).collect())?;
        for (from, to) in attacks {
            let lookup = |name: &str| {
                af.index_of(name)
                    .ok_or_else(|| Error::UnknownArgument(name.to_string()))
            };
            let (i, j) = (lookup(from)?, lookup(to)?);
            af.add_attack(i, j)?;
        }
        Ok(af)
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.len {
            return Err(Error::LabelCount {
                expected: self.len,
                got: labels.len(),
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn add_attack(&mut self, from: usize, to: usize) -> Result<()> {
        for index in [from, to] {
            if index >= self.len {
                return Err(Error::MalformedSet {
                    index,
                    len: self.len,
                });
            }
        }
        self.outgoing[from].insert(to);
        self.incoming[to].insert(from);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// All arguments, `A`.
    pub fn arguments(&self) -> ArgSet {
        ArgSet::full(self.len)
    }

    pub fn attacks(&self, from: usize, to: usize) -> bool {
        from < self.len && self.outgoing[from].contains(to)
    }

    /// Attack pairs in row-major order.
    pub fn attack_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len).flat_map(move |i| self.outgoing[i].iter().map(move |j| (i, j)))
    }

    pub fn attack_count(&self) -> usize {
        self.outgoing.iter().map(|s| s.len()).sum()
    }

    /// Arguments attacked by the single argument `index`.
    pub fn targets(&self, index: usize) -> ArgSet {
        self.outgoing[index]
    }

    /// Arguments attacking the single argument `index`.
    pub fn attackers(&self, index: usize) -> ArgSet {
        self.incoming[index]
    }

    pub fn is_labelled(&self) -> bool {
        self.labels.is_some()
    }

    pub fn name(&self, index: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(labels) => Cow::Borrowed(labels[index].as_str()),
            None => default_name(index),
        }
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.len).map(|i| self.name(i).into_owned()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        (0..self.len).find(|&i| self.name(i) == name)
    }

    /// Parses a set from argument names.
    pub fn set_of(&self, names: &[&str]) -> Result<ArgSet> {
        names
            .iter()
            .map(|n| {
                self.index_of(n)
                    .ok_or_else(|| Error::UnknownArgument(n.to_string()))
            })
            .collect()
    }

    pub fn set_names(&self, set: ArgSet) -> Vec<String> {
        set.iter().map(|i| self.name(i).into_owned()).collect()
    }

    pub fn check_set(&self, set: ArgSet) -> Result<()> {
        if set.bound() > self.len {
            return Err(Error::MalformedSet {
                index: set.bound() - 1,
                len: self.len,
            });
        }
        Ok(())
    }

    pub(crate) fn plus_unchecked(&self, set: ArgSet) -> ArgSet {
        set.iter()
            .fold(ArgSet::EMPTY, |acc, i| acc | self.outgoing[i])
    }

    pub(crate) fn minus_unchecked(&self, set: ArgSet) -> ArgSet {
        set.iter()
            .fold(ArgSet::EMPTY, |acc, i| acc | self.incoming[i])
    }

    /// `E⁺`: the arguments attacked by some member of `set`.
    pub fn attacked_by(&self, set: ArgSet) -> Result<ArgSet> {
        self.check_set(set)?;
        Ok(self.plus_unchecked(set))
    }

    /// `E⁻`: the arguments attacking some member of `set`.
    pub fn attackers_of(&self, set: ArgSet) -> Result<ArgSet> {
        self.check_set(set)?;
        Ok(self.minus_unchecked(set))
    }

    /// `Γ(E)`: the arguments all of whose attackers are attacked by `set`.
    pub fn defended_set(&self, set: ArgSet) -> Result<ArgSet> {
        self.check_set(set)?;
        let plus = self.plus_unchecked(set);
        Ok((0..self.len)
            .filter(|&a| self.incoming[a].is_subset(plus))
            .collect())
    }

    pub fn is_conflict_free(&self, set: ArgSet) -> Result<bool> {
        self.check_set(set)?;
        Ok(self.plus_unchecked(set).is_disjoint(set))
    }

    /// `U⁻ ⊆ U`
    pub fn is_unattacked_set(&self, set: ArgSet) -> Result<bool> {
        self.check_set(set)?;
        Ok(self.minus_unchecked(set).is_subset(set))
    }

    pub fn self_attackers(&self) -> ArgSet {
        (0..self.len)
            .filter(|&i| self.outgoing[i].contains(i))
            .collect()
    }

    /// The induced sub-framework `F↓S`, reindexed densely in ascending
    /// parent order.
    pub fn restrict(&self, set: ArgSet) -> Result<Restriction> {
        self.check_set(set)?;
        let to_parent = set.to_vec();
        let mut from_parent = vec![usize::MAX; self.len];
        for (child, &parent) in to_parent.iter().enumerate() {
            from_parent[parent] = child;
        }
        let mut framework = Self::new(to_parent.len())?;
        for (child, &parent) in to_parent.iter().enumerate() {
            for target in (self.outgoing[parent] & set).iter() {
                framework.add_attack(child, from_parent[target])?;
            }
        }
        if let Some(labels) = &self.labels {
            framework.labels = Some(to_parent.iter().map(|&p| labels[p].clone()).collect());
        }
        Ok(Restriction {
            framework,
            to_parent,
        })
    }

    /// The reduct `F^E = F↓(A \ (E ∪ E⁺))`.
    pub fn reduct(&self, set: ArgSet) -> Result<Restriction> {
        let plus = self.attacked_by(set)?;
        self.restrict(self.arguments() - (set | plus))
    }

    /// Same framework with default names, dropping any label table.
    pub fn unlabelled(&self) -> Self {
        ArgumentationFramework {
            labels: None,
            ..self.clone()
        }
    }
}

impl PartialEq for ArgumentationFramework {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len
            && self.outgoing == other.outgoing
            && (0..self.len).all(|i| self.name(i) == other.name(i))
    }
}

impl Eq for ArgumentationFramework {}

impl fmt::Debug for ArgumentationFramework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let attacks: Vec<String> = self
            .attack_pairs()
            .map(|(i, j)| format!("({},{})", self.name(i), self.name(j)))
            .collect();
        write!(
            f,
            "AF({{{}}}, {{{}}})",
            self.names().join(","),
            attacks.join(",")
        )
    }
}

/// The framework fixtures used throughout the tests and documentation.
pub mod fixtures {
    use super::ArgumentationFramework;

    fn build(args: &[&str], attacks: &[(&str, &str)]) -> ArgumentationFramework {
        ArgumentationFramework::from_names(args, attacks).expect("fixture is well-formed")
    }

    /// 3-cycle `a→b→c→a` with a tail `c→d`.
    pub fn f1() -> ArgumentationFramework {
        build(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")],
        )
    }

    /// Mutual attack `a↔b`, `b→c`, self-attacking `c`.
    pub fn f2() -> ArgumentationFramework {
        build(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "a"), ("b", "c"), ("c", "c")],
        )
    }

    /// Isolated 3-cycle next to a chain `d→e`.
    pub fn f3() -> ArgumentationFramework {
        build(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "a"), ("d", "e")],
        )
    }

    pub fn f4() -> ArgumentationFramework {
        build(
            &["a", "b", "c", "d"],
            &[
                ("a", "b"),
                ("a", "c"),
                ("b", "a"),
                ("c", "a"),
                ("c", "d"),
                ("d", "d"),
                ("d", "c"),
            ],
        )
    }

    /// Self-attacking `a` attacking `b`.
    pub fn f5() -> ArgumentationFramework {
        build(&["a", "b"], &[("a", "a"), ("a", "b")])
    }

    /// Mutual attack `a↔b`.
    pub fn f6() -> ArgumentationFramework {
        build(&["a", "b"], &[("a", "b"), ("b", "a")])
    }

    pub fn f7() -> ArgumentationFramework {
        build(&["a", "b", "c"], &[("a", "a"), ("a", "b"), ("b", "c")])
    }

    pub fn all() -> Vec<(&'static str, ArgumentationFramework)> {
        vec![
            ("F1", f1()),
            ("F2", f2()),
            ("F3", f3()),
            ("F4", f4()),
            ("F5", f5()),
            ("F6", f6()),
            ("F7", f7()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    fn set(af: &ArgumentationFramework, names: &[&str]) -> ArgSet {
        af.set_of(names).unwrap()
    }

    #[test]
    fn canonical_order() {
        let mut sets = [
            ArgSet::from_iter([1, 2]),
            ArgSet::from_iter([0, 3]),
            ArgSet::EMPTY,
            ArgSet::from_iter([2]),
            ArgSet::from_iter([0, 2]),
            ArgSet::from_iter([0]),
        ];
        sets.sort();
        let listed: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        assert_eq!(
            listed,
            vec![vec![], vec![0], vec![2], vec![0, 2], vec![0, 3], vec![1, 2]]
        );
    }

    #[test]
    fn restrict_to_cycle() {
        let f1 = f1();
        let r = f1.restrict(set(&f1, &["a", "b", "c"])).unwrap();
        let cycle =
            ArgumentationFramework::from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")])
                .unwrap();
        assert_eq!(r.framework, cycle);
        assert_eq!(r.to_parent, vec![0, 1, 2]);
    }

    #[test]
    fn restrict_identity_and_empty() {
        for (_, af) in all() {
            assert_eq!(af.restrict(af.arguments()).unwrap().framework, af);
        }
        let r = f5().restrict(ArgSet::EMPTY).unwrap();
        assert!(r.framework.is_empty());
        assert_eq!(r.framework.attack_count(), 0);
    }

    #[test]
    fn restrict_rejects_out_of_range() {
        let err = f5().restrict(ArgSet::from_iter([0, 5])).unwrap_err();
        assert_eq!(err, Error::MalformedSet { index: 5, len: 2 });
    }

    #[test]
    fn reduct_examples() {
        let f1 = f1();
        let r = f1.reduct(set(&f1, &["a"])).unwrap();
        let expected = ArgumentationFramework::from_names(&["c", "d"], &[("c", "d")]).unwrap();
        assert_eq!(r.framework, expected);

        let f7 = f7();
        let r = f7.reduct(set(&f7, &["c"])).unwrap();
        let expected =
            ArgumentationFramework::from_names(&["a", "b"], &[("a", "a"), ("a", "b")]).unwrap();
        assert_eq!(r.framework, expected);

        for (_, af) in all() {
            assert_eq!(af.reduct(ArgSet::EMPTY).unwrap().framework, af);
        }
    }

    #[test]
    fn attack_neighbourhoods() {
        let f1 = f1();
        assert_eq!(f1.attacked_by(set(&f1, &["a"])).unwrap(), set(&f1, &["b"]));
        assert_eq!(f1.attacked_by(ArgSet::EMPTY).unwrap(), ArgSet::EMPTY);
        let f3 = f3();
        assert_eq!(
            f3.attacked_by(set(&f3, &["a", "d"])).unwrap(),
            set(&f3, &["b", "e"])
        );
        assert_eq!(f1.attackers_of(set(&f1, &["d"])).unwrap(), set(&f1, &["c"]));
        assert_eq!(f1.attackers_of(ArgSet::EMPTY).unwrap(), ArgSet::EMPTY);
        let f2 = f2();
        assert_eq!(
            f2.attackers_of(set(&f2, &["c"])).unwrap(),
            set(&f2, &["b", "c"])
        );
    }

    #[test]
    fn defense() {
        let f6 = f6();
        assert_eq!(f6.defended_set(set(&f6, &["a"])).unwrap(), set(&f6, &["a"]));
        assert_eq!(
            ArgumentationFramework::empty().defended_set(ArgSet::EMPTY).unwrap(),
            ArgSet::EMPTY
        );
        assert_eq!(f1().defended_set(ArgSet::EMPTY).unwrap(), ArgSet::EMPTY);
    }

    #[test]
    fn conflict_freeness_and_unattacked_sets() {
        let f1 = f1();
        assert!(f1.is_conflict_free(set(&f1, &["a", "d"])).unwrap());
        assert!(f1.is_conflict_free(ArgSet::EMPTY).unwrap());
        let f7 = f7();
        assert!(!f7.is_conflict_free(set(&f7, &["b", "c"])).unwrap());

        assert!(f1.is_unattacked_set(set(&f1, &["a", "b", "c"])).unwrap());
        assert!(f1.is_unattacked_set(ArgSet::EMPTY).unwrap());
        assert!(!f1.is_unattacked_set(set(&f1, &["d"])).unwrap());
    }

    #[test]
    fn self_attackers_examples() {
        let f2 = f2();
        assert_eq!(f2.self_attackers(), set(&f2, &["c"]));
        assert_eq!(f1().self_attackers(), ArgSet::EMPTY);
        assert_eq!(ArgumentationFramework::empty().self_attackers(), ArgSet::EMPTY);
    }

    #[test]
    fn capacity_and_labels() {
        assert!(matches!(
            ArgumentationFramework::new(65),
            Err(Error::TooLarge { requested: 65, .. })
        ));
        let mut af = ArgumentationFramework::new(2).unwrap();
        assert_eq!(
            af.set_labels(vec!["x".into(), "x".into()]),
            Err(Error::DuplicateLabel("x".into()))
        );
        assert!(af.add_attack(0, 2).is_err());
        assert_eq!(af.name(1), "b");
    }

    fn arb_af(max: usize) -> impl Strategy<Value = ArgumentationFramework> {
        (0..=max).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
                let pairs = (0..n * n).filter(|&k| bits[k]).map(|k| (k / n, k % n));
                ArgumentationFramework::from_attacks(n, pairs).unwrap()
            })
        })
    }

    fn subsets(n: usize) -> impl Iterator<Item = ArgSet> {
        (0..1u64 << n).map(ArgSet::from_bits)
    }

    proptest! {
        #[test]
        fn neighbourhoods_are_monotone(af in arb_af(5), a in any::<u64>(), b in any::<u64>()) {
            let full = af.arguments().bits();
            let small = ArgSet::from_bits(a & b & full);
            let big = ArgSet::from_bits(a & full);
            prop_assert!(af.attacked_by(small).unwrap().is_subset(af.attacked_by(big).unwrap()));
            prop_assert!(af.attackers_of(small).unwrap().is_subset(af.attackers_of(big).unwrap()));
            prop_assert!(af.defended_set(small).unwrap().is_subset(af.defended_set(big).unwrap()));
        }

        #[test]
        fn conflict_freeness_matches_plus(af in arb_af(5), a in any::<u64>()) {
            let e = ArgSet::from_bits(a & af.arguments().bits());
            let by_plus = af.attacked_by(e).unwrap().is_disjoint(e);
            prop_assert_eq!(af.is_conflict_free(e).unwrap(), by_plus);
        }
    }

    /// Reducts commute with restriction to unattacked sets, checked on every
    /// framework with at most three arguments.
    #[test]
    fn reduct_commutes_with_unattacked_restriction() {
        for n in 0..=3usize {
            for mask in 0..1u64 << (n * n) {
                let pairs = (0..n * n).filter(|&k| mask >> k & 1 == 1).map(|k| (k / n, k % n));
                let af = ArgumentationFramework::from_attacks(n, pairs).unwrap();
                for s in subsets(n).filter(|&s| af.is_unattacked_set(s).unwrap()) {
                    let sub = af.restrict(s).unwrap();
                    for e in subsets(n).filter(|&e| e.is_subset(s) && af.is_conflict_free(e).unwrap()) {
                        let local: ArgSet = sub
                            .to_parent
                            .iter()
                            .enumerate()
                            .filter(|(_, p)| e.contains(**p))
                            .map(|(c, _)| c)
                            .collect();
                        let left = sub.framework.reduct(local).unwrap();
                        let whole = af.reduct(e).unwrap();
                        let keep = s - (e | af.attacked_by(e).unwrap());
                        let keep_local: ArgSet = whole
                            .to_parent
                            .iter()
                            .enumerate()
                            .filter(|(_, p)| keep.contains(**p))
                            .map(|(c, _)| c)
                            .collect();
                        let right = whole.framework.restrict(keep_local).unwrap();
                        assert_eq!(left.framework, right.framework);
                    }
                }
            }
        }
    }
}
