//! Bracket classes: orbit sums of monomials in the boundary divisors `D_m`,
//! `m ∈ F_2^{2g} \ 0`, labelled by an exponent pattern and the code of
//! `F_2`-linear relations among the distinct indices.
//!
//! `{1^2 2 3 (123)}` is the sum of all monomials `D_a² D_b D_c` with `a, b, c`
//! distinct and `a + b + c = 0`, each monomial counted once.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::betti::lambda_series;
use crate::cones::{catalog, Cone, CATALOG_MAX_DIM};
use crate::invariants::hilbert_free;
use crate::linalg::permutations;
use crate::{Error, Int, Rat, Result};

/// Subset of positions, bit `j` standing for position `j`.
type Word = u32;

/// Largest degree for enumeration and multiplication.
pub const MAX_BRACKET_DEGREE: u32 = 7;

/// Largest genus accepted by [`oracle_expand`].
pub const ORACLE_MAX_GENUS: usize = 6;

/// Largest total degree accepted by [`oracle_expand`].
pub const ORACLE_MAX_DEGREE: u32 = 6;

fn positions(w: Word) -> impl Iterator<Item = usize> {
    (0..32).filter(move |j| w >> j & 1 == 1)
}

/// Words ordered by weight, then lexicographically by their position lists.
fn cmp_words(a: Word, b: Word) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| positions(a).cmp(positions(b)))
}

fn cmp_word_lists(a: &[Word], b: &[Word]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match cmp_words(*x, *y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// All nonzero words of the span, unordered.
fn span(gens: &[Word]) -> Vec<Word> {
    let mut set: BTreeSet<Word> = BTreeSet::new();
    set.insert(0);
    for &g in gens {
        if set.contains(&g) {
            continue;
        }
        let shifted: Vec<Word> = set.iter().map(|w| w ^ g).collect();
        set.extend(shifted);
    }
    set.remove(&0);
    set.into_iter().collect()
}

fn permute_word(w: Word, perm: &[usize]) -> Word {
    positions(w).fold(0, |acc, j| acc | 1 << perm[j])
}

/// Permutations of positions that preserve a nonincreasing exponent list.
fn block_permutations(exps: &[u32]) -> Vec<Vec<usize>> {
    let mut result = vec![Vec::new()];
    let mut start = 0;
    while start < exps.len() {
        let end = (start..exps.len()).find(|&j| exps[j] != exps[start]).unwrap_or(exps.len());
        let local = permutations(end - start);
        let mut next = Vec::with_capacity(result.len() * local.len());
        for prefix in &result {
            for p in &local {
                let mut q = prefix.clone();
                q.extend(p.iter().map(|&x| x + start));
                next.push(q);
            }
        }
        result = next;
        start = end;
    }
    result
}

/// Orbit label of a monomial type.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BracketClass {
    /// Nonincreasing exponents, one per distinct index.
    exps: Vec<u32>,
    /// All nonzero codewords, in canonical position labelling, sorted by
    /// [`cmp_words`].
    words: Vec<Word>,
}

impl BracketClass {
    /// The empty monomial.
    pub fn unit() -> Self {
        BracketClass { exps: Vec::new(), words: Vec::new() }
    }

    /// Class of monomials with the given exponents (any order) whose indices
    /// satisfy exactly the relations spanned by `relations` (bitmasks over
    /// the exponent positions).
    pub fn from_parts(exps: &[u32], relations: &[u32]) -> Result<Self> {
        if exps.len() > 16 {
            return Err(Error::OutOfRange(format!("{} distinct indices", exps.len())));
        }
        if exps.contains(&0) {
            return Err(Error::InvalidClass("zero exponent".into()));
        }
        let full: Word = if exps.is_empty() { 0 } else { (1 << exps.len()) - 1 };
        if relations.iter().any(|&r| r & !full != 0) {
            return Err(Error::InvalidClass("relation refers to a missing index".into()));
        }
        let mut order: Vec<usize> = (0..exps.len()).collect();
        order.sort_by(|&a, &b| exps[b].cmp(&exps[a]));
        let mut perm = vec![0; exps.len()];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        let sorted: Vec<u32> = order.iter().map(|&j| exps[j]).collect();
        let rel: Vec<Word> = relations.iter().map(|&r| permute_word(r, &perm)).collect();
        let words = span(&rel);
        if let Some(w) = words.iter().find(|w| w.count_ones() < 3) {
            return Err(Error::InvalidClass(format!("relation of weight {}", w.count_ones())));
        }
        Ok(Self::canonical(sorted, words))
    }

    /// Canonical representative for nonincreasing `exps` and a full word set.
    fn canonical(exps: Vec<u32>, words: Vec<Word>) -> Self {
        if words.is_empty() {
            return BracketClass { exps, words };
        }
        let mut best: Option<Vec<Word>> = None;
        for p in block_permutations(&exps) {
            let mut img: Vec<Word> = words.iter().map(|&w| permute_word(w, &p)).collect();
            img.sort_by(|a, b| cmp_words(*a, *b));
            if best.as_ref().map_or(true, |b| cmp_word_lists(&img, b) == Ordering::Less) {
                best = Some(img);
            }
        }
        BracketClass { exps, words: best.expect("at least the identity permutation") }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Number of distinct indices.
    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    /// Dimension of the relation code.
    pub fn code_dim(&self) -> u32 {
        (self.words.len() + 1).trailing_zeros()
    }

    /// All nonzero relations, as sorted position lists.
    pub fn codewords(&self) -> Vec<Vec<usize>> {
        self.words.iter().map(|&w| positions(w).collect()).collect()
    }

    /// Basis of the code chosen greedily by weight, then lexicographically.
    pub fn relation_basis(&self) -> Vec<Vec<usize>> {
        let mut chosen: Vec<Word> = Vec::new();
        let mut spanned: BTreeSet<Word> = BTreeSet::new();
        for &w in &self.words {
            if !spanned.contains(&w) {
                chosen.push(w);
                spanned = span(&chosen).into_iter().collect();
            }
        }
        chosen.into_iter().map(|w| positions(w).collect()).collect()
    }

    /// Minimum weight of a nonzero relation, if any.
    pub fn min_weight(&self) -> Option<u32> {
        self.words.iter().map(|w| w.count_ones()).min()
    }
}

impl Ord for BracketClass {
    /// Higher exponent patterns first, then smaller codes.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .exps
            .cmp(&self.exps)
            .then_with(|| self.words.len().cmp(&other.words.len()))
            .then_with(|| cmp_word_lists(&self.words, &other.words))
    }
}

impl PartialOrd for BracketClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_label(f: &mut fmt::Formatter<'_>, j: usize) -> fmt::Result {
    if j + 1 < 10 {
        write!(f, "{}", j + 1)
    } else {
        write!(f, "[{}]", j + 1)
    }
}

impl fmt::Display for BracketClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (j, &e) in self.exps.iter().enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            write_label(f, j)?;
            match e {
                1 => {}
                2..=9 => write!(f, "^{e}")?,
                _ => write!(f, "^{{{e}}}")?,
            }
        }
        let basis = self.relation_basis();
        if !basis.is_empty() {
            f.write_str(" (")?;
            for (k, w) in basis.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                for &j in w {
                    write_label(f, j)?;
                }
            }
            f.write_str(")")?;
        }
        f.write_str("}")
    }
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { chars: src.chars().collect(), pos: 0, src }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.bump() {
            Some(c) if c == want => Ok(()),
            other => Err(self.error(&format!("expected '{want}', found {}", describe(other)))),
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("number too large"))
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in \"{}\"", self.pos, self.src))
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

fn describe(c: Option<char>) -> String {
    c.map_or_else(|| "end of input".to_string(), |c| format!("'{c}'"))
}

/// `digit` or `[number]`.
fn parse_label(cur: &mut Cursor<'_>) -> Result<u64> {
    match cur.peek() {
        Some('[') => {
            cur.bump();
            let n = cur.number()?;
            cur.expect(']')?;
            Ok(n)
        }
        Some(c) if c.is_ascii_digit() && c != '0' => {
            cur.bump();
            Ok(u64::from(c.to_digit(10).expect("digit")))
        }
        other => Err(cur.error(&format!("expected an index, found {}", describe(other)))),
    }
}

/// `digit` or `{number}` after `^`.
fn parse_exponent(cur: &mut Cursor<'_>) -> Result<u64> {
    match cur.peek() {
        Some('{') => {
            cur.bump();
            let n = cur.number()?;
            cur.expect('}')?;
            Ok(n)
        }
        Some(c) if c.is_ascii_digit() => {
            cur.bump();
            Ok(u64::from(c.to_digit(10).expect("digit")))
        }
        other => Err(cur.error(&format!("expected an exponent, found {}", describe(other)))),
    }
}

fn parse_class(cur: &mut Cursor<'_>) -> Result<BracketClass> {
    cur.expect('{')?;
    let mut labels: Vec<u64> = Vec::new();
    let mut exps: Vec<u32> = Vec::new();
    let mut relations: Vec<Word> = Vec::new();
    loop {
        match cur.peek() {
            Some('}') => {
                cur.bump();
                break;
            }
            Some('(') => {
                cur.bump();
                loop {
                    let mut w: Word = 0;
                    while !matches!(cur.peek(), Some(',') | Some(')')) {
                        let label = parse_label(cur)?;
                        let j = labels
                            .iter()
                            .position(|&l| l == label)
                            .ok_or_else(|| cur.error(&format!("relation uses unknown index {label}")))?;
                        if w >> j & 1 == 1 {
                            return Err(cur.error("index repeated inside a relation"));
                        }
                        w |= 1 << j;
                    }
                    if w == 0 {
                        return Err(cur.error("empty relation"));
                    }
                    relations.push(w);
                    if cur.bump() == Some(')') {
                        break;
                    }
                }
                cur.expect('}')?;
                break;
            }
            _ => {
                let label = parse_label(cur)?;
                if labels.contains(&label) {
                    return Err(cur.error(&format!("index {label} repeated")));
                }
                let e = if cur.peek() == Some('^') {
                    cur.bump();
                    parse_exponent(cur)?
                } else {
                    1
                };
                if e == 0 {
                    return Err(cur.error("zero exponent"));
                }
                labels.push(label);
                exps.push(u32::try_from(e).map_err(|_| cur.error("exponent too large"))?);
                if labels.len() > 16 {
                    return Err(cur.error("more than 16 indices"));
                }
            }
        }
    }
    BracketClass::from_parts(&exps, &relations)
}

impl FromStr for BracketClass {
    type Err = Error;

    /// Accepts both `{1^2 2 3 4 (1234)}` and the compact `{1^2234(1234)}`.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let c = parse_class(&mut cur)?;
        if !cur.at_end() {
            return Err(cur.error("trailing input"));
        }
        Ok(c)
    }
}

/// Rational linear combination of bracket classes.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ClassSum {
    terms: BTreeMap<BracketClass, Rat>,
}

impl ClassSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::from(BracketClass::unit())
    }

    pub fn add_term(&mut self, c: BracketClass, coeff: Rat) {
        let e = self.terms.entry(c.clone()).or_insert_with(Rat::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (c, x) in &other.terms {
            out.add_term(c.clone(), x.clone());
        }
        out
    }

    pub fn scale(&self, k: &Rat) -> Self {
        let mut out = Self::zero();
        for (c, x) in &self.terms {
            out.add_term(c.clone(), x * k);
        }
        out
    }

    pub fn coeff(&self, c: &BracketClass) -> Rat {
        self.terms.get(c).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BracketClass, &Rat)> {
        self.terms.iter()
    }

    /// Number of classes with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree among the terms.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(BracketClass::degree).max().unwrap_or(0)
    }
}

impl From<BracketClass> for ClassSum {
    fn from(c: BracketClass) -> Self {
        let mut s = Self::zero();
        s.add_term(c, Rat::one());
        s
    }
}

impl fmt::Display for ClassSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, x)) in self.terms.iter().enumerate() {
            let mag = x.abs();
            match (k, x.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A sum of coefficient-weighted products of bracket classes, kept unexpanded.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Expression {
    pub terms: Vec<(Rat, Vec<BracketClass>)>,
}

impl Expression {
    /// Expands every product with [`multiply`].
    pub fn evaluate(&self) -> Result<ClassSum> {
        let mut total = ClassSum::zero();
        for (k, factors) in &self.terms {
            let mut prod = ClassSum::unit();
            for f in factors {
                prod = multiply(&prod, &ClassSum::from(f.clone()))?;
            }
            total = total.add(&prod.scale(k));
        }
        Ok(total)
    }

    /// Expands every product with [`oracle_expand`] in genus `g`.
    pub fn evaluate_oracle(&self, g: usize) -> Result<ClassSum> {
        let mut total = ClassSum::zero();
        for (k, factors) in &self.terms {
            let sums: Vec<ClassSum> = factors.iter().cloned().map(ClassSum::from).collect();
            total = total.add(&oracle_expand(g, &sums)?.scale(k));
        }
        Ok(total)
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(_, fs)| fs.iter().map(BracketClass::degree).sum()).max().unwrap_or(0)
    }
}

fn parse_coefficient(cur: &mut Cursor<'_>) -> Result<Option<Rat>> {
    if !cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        return Ok(None);
    }
    let num = Int::from(cur.number()?);
    let k = if cur.peek() == Some('/') {
        cur.bump();
        let den = cur.number()?;
        if den == 0 {
            return Err(cur.error("zero denominator"));
        }
        Rat::new(num, Int::from(den))
    } else {
        Rat::from_integer(num)
    };
    Ok(Some(k))
}

impl FromStr for Expression {
    type Err = Error;

    /// Grammar: terms joined by `+`/`-`; a term is an optional rational
    /// coefficient followed by factors `{...}` or `{...}^n`, separated by `*`
    /// or whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let mut terms = Vec::new();
        let mut sign = Rat::one();
        if cur.peek() == Some('-') {
            cur.bump();
            sign = -sign;
        }
        loop {
            let mut coeff = parse_coefficient(&mut cur)?.unwrap_or_else(Rat::one);
            coeff *= &sign;
            if cur.peek() == Some('*') {
                cur.bump();
            }
            let mut factors = Vec::new();
            while cur.peek() == Some('{') {
                let c = parse_class(&mut cur)?;
                let power = if cur.peek() == Some('^') {
                    cur.bump();
                    cur.number()?
                } else {
                    1
                };
                for _ in 0..power {
                    factors.push(c.clone());
                }
                if cur.peek() == Some('*') {
                    cur.bump();
                    if cur.peek() != Some('{') {
                        return Err(cur.error("expected a factor after '*'"));
                    }
                }
            }
            if factors.is_empty() {
                let found = describe(cur.peek());
                return Err(cur.error(&format!("expected a bracket class, found {found}")));
            }
            terms.push((coeff, factors));
            match cur.bump() {
                None => break,
                Some('+') => sign = Rat::one(),
                Some('-') => sign = -Rat::one(),
                Some(c) => return Err(cur.error(&format!("unexpected '{c}'"))),
            }
        }
        Ok(Expression { terms })
    }
}

/// Caches shared by enumeration, multiplication and the oracle.
#[derive(Default)]
struct Tables {
    codes: BTreeMap<usize, Vec<Vec<Word>>>,
    by_degree: BTreeMap<u32, Vec<BracketClass>>,
    canon: BTreeMap<(Vec<u32>, Vec<Word>), BracketClass>,
}

impl Tables {
    /// Codes in `F_2^l` of minimum weight at least 3, as full word lists.
    fn codes(&mut self, l: usize) -> &[Vec<Word>] {
        self.codes.entry(l).or_insert_with(|| {
            let candidates: Vec<Word> = (1..(1u32 << l)).filter(|w| w.count_ones() >= 3).collect();
            let mut seen: BTreeSet<Vec<Word>> = BTreeSet::new();
            seen.insert(Vec::new());
            let mut frontier = vec![Vec::new()];
            while let Some(code) = frontier.pop() {
                for &w in &candidates {
                    if code.contains(&w) {
                        continue;
                    }
                    let mut gens = code.clone();
                    gens.push(w);
                    let next = span(&gens);
                    if next.iter().all(|x| x.count_ones() >= 3) && seen.insert(next.clone()) {
                        frontier.push(next);
                    }
                }
            }
            seen.into_iter().collect()
        })
    }

    /// Class of a monomial with exponents `exps` (nonincreasing) and word list.
    fn classify(&mut self, exps: Vec<u32>, mut words: Vec<Word>) -> BracketClass {
        words.sort_unstable();
        let key = (exps, words);
        if let Some(c) = self.canon.get(&key) {
            return c.clone();
        }
        let c = BracketClass::canonical(key.0.clone(), key.1.clone());
        self.canon.insert(key, c.clone());
        c
    }

    /// Class of an exponent list in arbitrary order with relations on those positions.
    fn classify_unsorted(&mut self, exps: &[u32], words: &[Word]) -> BracketClass {
        let mut order: Vec<usize> = (0..exps.len()).collect();
        order.sort_by(|&a, &b| exps[b].cmp(&exps[a]));
        let mut perm = vec![0; exps.len()];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        let sorted = order.iter().map(|&j| exps[j]).collect();
        let ws = words.iter().map(|&w| permute_word(w, &perm)).collect();
        self.classify(sorted, ws)
    }

    fn enumerate(&mut self, d: u32) -> Vec<BracketClass> {
        if let Some(v) = self.by_degree.get(&d) {
            return v.clone();
        }
        let mut out: BTreeSet<BracketClass> = BTreeSet::new();
        for exps in partitions(d) {
            let codes = self.codes(exps.len()).to_vec();
            for code in codes {
                out.insert(self.classify(exps.clone(), code));
            }
        }
        let v: Vec<BracketClass> = out.into_iter().collect();
        self.by_degree.insert(d, v.clone());
        v
    }

    /// `N(A, B; C)` for every `C` with a nonzero count.
    fn structure_constants(&mut self, a: &BracketClass, b: &BracketClass) -> Vec<(BracketClass, u64)> {
        let d = a.degree() + b.degree();
        let mut a_sorted = a.exps.clone();
        a_sorted.sort_unstable();
        let mut out = Vec::new();
        for c in self.enumerate(d) {
            if c.len() > a.len() + b.len() || c.len() < a.len().max(b.len()) {
                continue;
            }
            let mut count = 0u64;
            for split in splits(&c.exps) {
                let mut parts: Vec<u32> = split.iter().copied().filter(|&x| x > 0).collect();
                parts.sort_unstable();
                if parts != a_sorted {
                    continue;
                }
                let rest: Vec<u32> = c.exps.iter().zip(&split).map(|(x, y)| x - y).collect();
                if self.restrict(&c, &split) == *a && self.restrict(&c, &rest) == *b {
                    count += 1;
                }
            }
            if count > 0 {
                out.push((c, count));
            }
        }
        out
    }

    /// Type of the sub-monomial with exponents `part` (zero meaning absent).
    fn restrict(&mut self, c: &BracketClass, part: &[u32]) -> BracketClass {
        let support: Vec<usize> = (0..part.len()).filter(|&j| part[j] > 0).collect();
        let mask: Word = support.iter().fold(0, |m, &j| m | 1 << j);
        let exps: Vec<u32> = support.iter().map(|&j| part[j]).collect();
        let words: Vec<Word> = c
            .words
            .iter()
            .filter(|&&w| w & !mask == 0)
            .map(|&w| support.iter().enumerate().fold(0, |acc, (k, &j)| acc | ((w >> j & 1) << k)))
            .collect();
        self.classify_unsorted(&exps, &words)
    }
}

/// Nonincreasing partitions of `d`.
fn partitions(d: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// All vectors `a` with `0 <= a_j <= c_j`.
fn splits(c: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &x in c {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=x).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

/// All bracket classes of degree `d`, in canonical order.
pub fn enumerate_brackets(d: u32) -> Result<Vec<BracketClass>> {
    if d > MAX_BRACKET_DEGREE {
        return Err(Error::OutOfRange(format!("degree {d} exceeds {MAX_BRACKET_DEGREE}")));
    }
    if d == 0 {
        return Ok(vec![BracketClass::unit()]);
    }
    Ok(Tables::default().enumerate(d))
}

/// Product of two class sums: `{A}{B} = Σ_C N(A, B; C) {C}`, where `N`
/// counts the ways a fixed monomial of type `C` splits into a monomial of
/// type `A` times one of type `B`.
pub fn multiply(a: &ClassSum, b: &ClassSum) -> Result<ClassSum> {
    let mut tables = Tables::default();
    let mut out = ClassSum::zero();
    for (ca, xa) in a.terms() {
        for (cb, xb) in b.terms() {
            let d = ca.degree() + cb.degree();
            if d > MAX_BRACKET_DEGREE {
                return Err(Error::OutOfRange(format!("product of degree {d} exceeds {MAX_BRACKET_DEGREE}")));
            }
            let k = xa * xb;
            if ca.is_empty() || cb.is_empty() {
                let c = if ca.is_empty() { cb } else { ca };
                out.add_term(c.clone(), k);
                continue;
            }
            for (c, n) in tables.structure_constants(ca, cb) {
                out.add_term(c, &k * Rat::from_integer(Int::from(n)));
            }
        }
    }
    Ok(out)
}

/// Class of the stratum of a cone: generators reduced mod 2, distinct
/// residues becoming indices (with multiplicities as exponents) and the
/// relations among the residues forming the code.
pub fn cone_to_bracket(c: &Cone) -> Result<BracketClass> {
    if c.genus_rank() > 32 {
        return Err(Error::OutOfRange("rank above 32".into()));
    }
    let mut residues: Vec<(u32, u32)> = Vec::new();
    for g in c.generators() {
        let r = g.iter().enumerate().fold(0u32, |acc, (k, x)| if x.is_odd() { acc | 1 << k } else { acc });
        if r == 0 {
            return Err(Error::InvalidCone("generator vanishes mod 2".into()));
        }
        match residues.iter_mut().find(|(v, _)| *v == r) {
            Some((_, e)) => *e += 1,
            None => residues.push((r, 1)),
        }
    }
    let vectors: Vec<u32> = residues.iter().map(|&(v, _)| v).collect();
    let exps: Vec<u32> = residues.iter().map(|&(_, e)| e).collect();
    BracketClass::from_parts(&exps, &kernel_words(&vectors))
}

/// Subsets of positions whose vectors sum to zero.
fn kernel_words(vectors: &[u32]) -> Vec<Word> {
    (1..(1u32 << vectors.len())).filter(|&w| positions(w).fold(0, |acc, j| acc ^ vectors[j]) == 0).collect()
}

/// Number of cone orbits of each dimension `1..=6` in the catalog.
pub fn cones_per_codim() -> Result<Vec<usize>> {
    let mut counts = vec![0; CATALOG_MAX_DIM + 1];
    for e in catalog(CATALOG_MAX_DIM)? {
        counts[e.dim] += e.multiplicity;
    }
    Ok(counts)
}

/// Number of pure strata classes in degree `d`: the sum over partitions of
/// `d/2` of the products of the numbers of cones of each part's dimension.
/// A repeated part contributes the square (cube, ...) of its count, so
/// ordered choices of cones are counted.
pub fn count_pure_strata(d: usize) -> Result<Int> {
    if d % 2 == 1 || d > 2 * CATALOG_MAX_DIM {
        return Err(Error::OutOfRange(format!("degree {d}: expected an even degree at most {}", 2 * CATALOG_MAX_DIM)));
    }
    let counts = cones_per_codim()?;
    let mut total = Int::zero();
    for p in partitions((d / 2) as u32) {
        total += p.iter().map(|&k| Int::from(counts[k as usize])).product::<Int>();
    }
    Ok(total)
}

/// Number of distinct monomials (unordered) in stratum classes of degree `d`.
pub fn count_strata_monomials(d: usize) -> Result<Int> {
    if d % 2 == 1 || d > 2 * CATALOG_MAX_DIM {
        return Err(Error::OutOfRange(format!("degree {d}: expected an even degree at most {}", 2 * CATALOG_MAX_DIM)));
    }
    let counts = cones_per_codim()?;
    let degrees: Vec<usize> = (1..counts.len()).flat_map(|k| core::iter::repeat(k).take(counts[k])).collect();
    Ok(hilbert_free(&degrees, d / 2).coeff(d / 2))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DimensionBound {
    /// Products of positive-degree λ-monomials with pure classes.
    pub lambda_part: Int,
    /// Pure classes of degree `d`.
    pub pure_part: Int,
    pub total: Int,
}

/// Upper bounds on the degree-`d` dimensions of the boundary algebra and of
/// the strata algebra, in that order.
pub fn algebra_dimension_bounds(d: usize) -> Result<(DimensionBound, DimensionBound)> {
    if d % 2 == 1 || d > 2 * CATALOG_MAX_DIM {
        return Err(Error::OutOfRange(format!("degree {d}: expected an even degree at most {}", 2 * CATALOG_MAX_DIM)));
    }
    let lambda = lambda_series(d);
    let mut tables = Tables::default();
    let boundary_pure = |j: usize, t: &mut Tables| -> Int {
        if j == 0 {
            Int::one()
        } else {
            Int::from(t.enumerate((j / 2) as u32).len())
        }
    };
    let strata_pure = |j: usize| -> Result<Int> {
        if j == 0 {
            Ok(Int::one())
        } else {
            count_pure_strata(j)
        }
    };
    let mut lb = Int::zero();
    let mut ls = Int::zero();
    for j in (0..d).step_by(2) {
        let l = lambda.coeff(d - j);
        lb += &l * boundary_pure(j, &mut tables);
        ls += &l * strata_pure(j)?;
    }
    let pb = boundary_pure(d, &mut tables);
    let ps = strata_pure(d)?;
    Ok((
        DimensionBound { total: &lb + &pb, lambda_part: lb, pure_part: pb },
        DimensionBound { total: &ls + &ps, lambda_part: ls, pure_part: ps },
    ))
}

/// Explicit monomial: `(index vector, exponent)` pairs sorted by vector.
type Monomial = Vec<(u32, u32)>;

/// All monomials of type `c` with indices in `F_2^g \ 0`.
fn orbit(c: &BracketClass, g: usize) -> Vec<Monomial> {
    let l = c.len();
    // vectors increase within each block, so every relabelling of the code
    // by block permutations is enumerated separately
    let labellings: BTreeSet<Vec<Word>> = block_permutations(&c.exps)
        .iter()
        .map(|p| {
            let mut ws: Vec<Word> = c.words.iter().map(|&w| permute_word(w, p)).collect();
            ws.sort_unstable();
            ws
        })
        .collect();
    let mut out = Vec::new();
    let mut assigned: Vec<u32> = Vec::with_capacity(l);
    fn rec(c: &BracketClass, g: usize, in_code: &[bool], assigned: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let j = assigned.len();
        if j == c.len() {
            let mut m: Monomial = assigned.iter().copied().zip(c.exps.iter().copied()).collect();
            m.sort_unstable();
            out.push(m);
            return;
        }
        // within a block of equal exponents the vectors increase
        let lo = if j > 0 && c.exps[j - 1] == c.exps[j] { assigned[j - 1] + 1 } else { 1 };
        'candidates: for v in lo..(1u32 << g) {
            if assigned.contains(&v) {
                continue;
            }
            // every subset containing j sums to zero exactly when it is a codeword
            for s in 0..(1u32 << j) {
                let sum = positions(s).fold(v, |acc, k| acc ^ assigned[k]);
                if (sum == 0) != in_code[(s | 1 << j) as usize] {
                    continue 'candidates;
                }
            }
            assigned.push(v);
            rec(c, g, in_code, assigned, out);
            assigned.pop();
        }
    }
    for words in labellings {
        let mut in_code = vec![false; 1 << l];
        for w in words {
            in_code[w as usize] = true;
        }
        rec(c, g, &in_code, &mut assigned, &mut out);
    }
    out
}

fn multiply_monomials(a: &Monomial, b: &Monomial) -> Monomial {
    let mut m: BTreeMap<u32, u32> = a.iter().copied().collect();
    for &(v, e) in b {
        *m.entry(v).or_default() += e;
    }
    m.into_iter().collect()
}

/// Cap on the number of explicit monomials handled by the oracle.
const ORACLE_MAX_TERMS: usize = 4_000_000;

/// Expands the product of the given class sums by brute force over explicit
/// index vectors in a Lagrangian `F_2^g`, then reads off the coefficient of
/// each class by classifying every resulting monomial by its relations.
///
/// Only valid when `g` is at least the number of distinct indices of every
/// class that can occur; below that some classes have no monomials.
pub fn oracle_expand(g: usize, factors: &[ClassSum]) -> Result<ClassSum> {
    if g == 0 || g > ORACLE_MAX_GENUS {
        return Err(Error::OutOfRange(format!("genus {g}: oracle supports 1..={ORACLE_MAX_GENUS}")));
    }
    let degree: u32 = factors.iter().map(ClassSum::degree).sum();
    if degree > ORACLE_MAX_DEGREE {
        return Err(Error::OutOfRange(format!("degree {degree} exceeds {ORACLE_MAX_DEGREE}")));
    }
    let mut poly: BTreeMap<Monomial, Rat> = BTreeMap::new();
    poly.insert(Vec::new(), Rat::one());
    for f in factors {
        let mut explicit: Vec<(Monomial, Rat)> = Vec::new();
        for (c, k) in f.terms() {
            explicit.extend(orbit(c, g).into_iter().map(|m| (m, k.clone())));
        }
        if poly.len().saturating_mul(explicit.len()) > ORACLE_MAX_TERMS * 4 {
            return Err(Error::OutOfRange("oracle expansion too large".into()));
        }
        let mut next: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m, x) in &poly {
            for (n, y) in &explicit {
                *next.entry(multiply_monomials(m, n)).or_insert_with(Rat::zero) += x * y;
            }
        }
        next.retain(|_, x| !x.is_zero());
        if next.len() > ORACLE_MAX_TERMS {
            return Err(Error::OutOfRange("oracle expansion too large".into()));
        }
        poly = next;
    }
    let mut tables = Tables::default();
    let mut grouped: BTreeMap<BracketClass, (Rat, usize, BTreeSet<Rat>)> = BTreeMap::new();
    for (m, x) in poly {
        let exps: Vec<u32> = m.iter().map(|&(_, e)| e).collect();
        let vectors: Vec<u32> = m.iter().map(|&(v, _)| v).collect();
        let c = tables.classify_unsorted(&exps, &kernel_words(&vectors));
        let entry = grouped.entry(c).or_insert_with(|| (Rat::zero(), 0, BTreeSet::new()));
        entry.0 += &x;
        entry.1 += 1;
        entry.2.insert(x);
    }
    let mut out = ClassSum::zero();
    for (c, (sum, seen, values)) in grouped {
        let size = orbit(&c, g).len();
        if seen != size || values.len() != 1 {
            return Err(Error::Inconsistent(format!("coefficients of {c} are not constant on its orbit")));
        }
        out.add_term(c, sum / Rat::from_integer(Int::from(size)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(s: &str) -> BracketClass {
        s.parse().unwrap()
    }

    fn sum(terms: &[(i64, &str)]) -> ClassSum {
        let mut out = ClassSum::zero();
        for &(k, s) in terms {
            out.add_term(cls(s), Rat::from_integer(Int::from(k)));
        }
        out
    }

    #[test]
    fn parse_and_render() {
        let c = cls("{1^2234(1234)}");
        assert_eq!(c.exponents(), &[2, 1, 1, 1]);
        assert_eq!(c.to_string(), "{1^2 2 3 4 (1234)}");
        assert_eq!(cls(&c.to_string()), c);
        assert_eq!(cls("{}"), BracketClass::unit());
        assert_eq!(cls("{1^{12}}").to_string(), "{1^{12}}");
        assert_eq!(cls("{a}".replace('a', "[10]").as_str()).to_string(), "{1}");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!("{12(12)}".parse::<BracketClass>(), Err(Error::InvalidClass(_))));
        assert!(matches!("{1(1)}".parse::<BracketClass>(), Err(Error::InvalidClass(_))));
        assert!("{11}".parse::<BracketClass>().is_err());
        assert!("{12".parse::<BracketClass>().is_err());
        assert!("{123(124)}".parse::<BracketClass>().is_err());
        assert!("{1^0}".parse::<BracketClass>().is_err());
    }

    #[test]
    fn exponent_order_is_normalized() {
        assert_eq!(cls("{1 2^2 3 (123)}"), cls("{1^2 2 3 (123)}"));
        assert_eq!(cls("{1^22^234(234)}"), cls("{1^22^234(134)}"));
    }

    #[test]
    fn cubic_classes() {
        let got = enumerate_brackets(3).unwrap();
        let want: BTreeSet<BracketClass> = ["{1^3}", "{1^22}", "{123}", "{123(123)}"].iter().map(|s| cls(s)).collect();
        assert_eq!(got.into_iter().collect::<BTreeSet<_>>(), want);
    }

    #[test]
    fn small_products() {
        let one = ClassSum::from(cls("{1}"));
        assert_eq!(multiply(&one, &one).unwrap(), sum(&[(1, "{1^2}"), (2, "{12}")]));
        let b2 = ClassSum::from(cls("{12}"));
        assert_eq!(multiply(&one, &b2).unwrap(), sum(&[(1, "{1^22}"), (3, "{123}"), (3, "{123(123)}")]));
        assert_eq!(multiply(&ClassSum::unit(), &b2).unwrap(), b2);
    }

    #[test]
    fn expression_grammar() {
        let e: Expression = "{1}^3".parse().unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].1.len(), 3);
        let e: Expression = "2{1} * {12} - 1/2 {1^2}".parse().unwrap();
        assert_eq!(e.terms.len(), 2);
        assert_eq!(e.terms[1].0, Rat::new(Int::from(-1), Int::from(2)));
        assert!("{1} +".parse::<Expression>().is_err());
        assert!("3".parse::<Expression>().is_err());
    }

    #[test]
    fn oracle_small_cases() {
        let one = ClassSum::from(cls("{1}"));
        assert_eq!(oracle_expand(3, &[]).unwrap(), ClassSum::unit());
        assert_eq!(oracle_expand(3, &[one.clone(), one.clone()]).unwrap(), multiply(&one, &one).unwrap());
        assert!(oracle_expand(7, &[one]).is_err());
    }

    #[test]
    fn partitions_and_splits() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(splits(&[2, 1]).len(), 6);
        assert_eq!(code_count(3), 2);
    }

    fn code_count(l: usize) -> usize {
        Tables::default().codes(l).len()
    }
}
