//! Rows of the hyperbolic Pascal triangle attached to the mosaic {4,q}.
//!
//! Every vertex carries a value and a type. Type A vertices have two
//! ascendants and hold their sum; type B vertices copy their single ascendant.
//! The two boundary vertices of each row (wingers) have value 1 and are
//! counted as type B.
//!
//! Row n+1 is built from row n by walking left to right: each adjacent pair
//! produces one A vertex, and each interior vertex of row n contributes
//! `q-4` (if A) or `q-3` (if B) copies of itself as B vertices, placed
//! between the A vertices it shares with its neighbours.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default per-row entry cap for generation.
pub const DEFAULT_ENTRY_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    A,
    B,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::A => "A",
            Tag::B => "B",
        })
    }
}

impl std::str::FromStr for Tag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Tag::A),
            "B" | "b" => Ok(Tag::B),
            _ => Err(Error::InvalidArgument(format!("unknown tag {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Entry {
    pub value: BigUint,
    pub tag: Tag,
}

impl Entry {
    pub fn new(value: impl Into<BigUint>, tag: Tag) -> Self {
        Self {
            value: value.into(),
            tag,
        }
    }

    pub fn winger() -> Self {
        Self::new(1u32, Tag::B)
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, self.tag)
    }
}

/// Schläfli parameter `q` of the mosaic {4,q}; always at least 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TriangleParams {
    q: u32,
}

impl TriangleParams {
    pub fn new(q: i64) -> Result<Self> {
        if q < 5 {
            return Err(Error::InvalidQ(q));
        }
        let q = u32::try_from(q)
            .map_err(|_| Error::InvalidArgument(format!("q = {q} is too large")))?;
        Ok(Self { q })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Number of B copies an interior vertex of the given type passes down.
    pub fn copies(&self, tag: Tag) -> usize {
        match tag {
            Tag::A => self.q as usize - 4,
            Tag::B => self.q as usize - 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    index: usize,
    entries: Vec<Entry>,
}

impl Row {
    /// Row 0: the base vertex, treated as a winger.
    pub fn base() -> Self {
        Self {
            index: 0,
            entries: vec![Entry::winger()],
        }
    }

    /// Row 1: two wingers.
    pub fn first() -> Self {
        Self {
            index: 1,
            entries: vec![Entry::winger(), Entry::winger()],
        }
    }

    /// Wraps user-supplied entries after checking the structural invariants.
    pub fn new(index: usize, entries: Vec<Entry>) -> Result<Self> {
        let row = Self { index, entries };
        row.validate()?;
        Ok(row)
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn values(&self) -> impl Iterator<Item = &BigUint> {
        self.entries.iter().map(|e| &e.value)
    }

    fn malformed(&self, reason: impl Into<String>) -> Error {
        Error::MalformedRow {
            index: self.index,
            reason: reason.into(),
        }
    }

    /// Wingers present and the row reads the same in both directions.
    pub fn validate(&self) -> Result<()> {
        let (Some(first), Some(last)) = (self.entries.first(), self.entries.last()) else {
            return Err(self.malformed("row is empty"));
        };
        if *first != Entry::winger() || *last != Entry::winger() {
            return Err(self.malformed("row must start and end with a winger 1B"));
        }
        if !self.entries.iter().eq(self.entries.iter().rev()) {
            return Err(self.malformed("row is not palindromic"));
        }
        if self.entries.iter().any(|e| e.value.is_zero()) {
            return Err(self.malformed("zero entry"));
        }
        Ok(())
    }

    /// Builds row `index + 1`.
    pub fn next(&self, params: TriangleParams) -> Result<Row> {
        if self.entries.len() < 2 {
            return Err(self.malformed("need at least two entries to descend"));
        }
        self.validate()?;
        let last = self.entries.len() - 1;
        let mut out = Vec::with_capacity(self.next_len_hint(params));
        out.push(Entry::winger());
        for (i, pair) in self.entries.windows(2).enumerate() {
            out.push(Entry::new(&pair[0].value + &pair[1].value, Tag::A));
            if i + 1 < last {
                let v = &pair[1];
                let c = params.copies(v.tag);
                out.extend(std::iter::repeat_n(Entry::new(v.value.clone(), Tag::B), c));
            }
        }
        out.push(Entry::winger());
        Ok(Row {
            index: self.index + 1,
            entries: out,
        })
    }

    fn next_len_hint(&self, params: TriangleParams) -> usize {
        let interior = &self.entries[1..self.entries.len() - 1];
        2 + (self.entries.len() - 1) + interior.iter().map(|e| params.copies(e.tag)).sum::<usize>()
    }

    /// Value/tag pairs left to right, e.g. `1B 3A 2B 2B 3A 1B`.
    pub fn display_plain(&self) -> String {
        self.entries
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_plain())
    }
}

/// Free-function form of [`Row::next`].
pub fn next_row(row: &Row, params: TriangleParams) -> Result<Row> {
    row.next(params)
}

/// Counts of type A, type B and all vertices of one row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowCounts {
    pub a: BigUint,
    pub b: BigUint,
    pub s: BigUint,
}

/// Row counts from the counting recurrences, without building the row.
///
/// `s_n = (q-1)s_{n-1} - (q-1)s_{n-2} + s_{n-3}` for `n >= 4` from
/// `s_1 = 2, s_2 = 3, s_3 = q`. Every adjacent pair of row n-1 yields one A
/// vertex of row n, so `a_n = s_{n-1} - 1`.
pub fn row_counts(params: TriangleParams, n: usize) -> RowCounts {
    if n == 0 {
        return RowCounts {
            a: BigUint::zero(),
            b: BigUint::one(),
            s: BigUint::one(),
        };
    }
    let s = s_sequence(params, n);
    let a = &s[n - 1] - BigUint::one();
    let total = s[n].clone();
    RowCounts {
        b: &total - &a,
        a,
        s: total,
    }
}

/// `[s_0, s_1, ..., s_n]`.
fn s_sequence(params: TriangleParams, n: usize) -> Vec<BigUint> {
    let q = BigUint::from(params.q());
    let mut s: Vec<BigUint> = vec![1u32.into(), 2u32.into(), 3u32.into(), q.clone()];
    let qm1 = &q - 1u32;
    while s.len() <= n {
        let m = s.len();
        // (q-1)(s_{m-1} - s_{m-2}) + s_{m-3}; s is nondecreasing so the difference is natural
        let next = &qm1 * (&s[m - 1] - &s[m - 2]) + &s[m - 3];
        s.push(next);
    }
    s.truncate(n + 1);
    s
}

/// Rows `0..=n_max`, or fewer if a row would exceed the entry cap.
#[derive(Clone, Debug)]
pub struct GeneratedRows {
    pub rows: Vec<Row>,
    /// Set when generation stopped before `n_max` because of the entry cap.
    pub truncated: Option<Truncation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub requested: usize,
    pub last_generated: usize,
    pub next_len: BigUint,
    pub cap: usize,
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "truncated at row {} of {} requested: row {} would have {} entries (cap {})",
            self.last_generated,
            self.requested,
            self.last_generated + 1,
            self.next_len,
            self.cap
        )
    }
}

pub fn generate_rows(
    params: TriangleParams,
    n_max: usize,
    entry_cap: usize,
) -> Result<GeneratedRows> {
    if entry_cap == 0 {
        return Err(Error::InvalidArgument("entry cap must be positive".into()));
    }
    let mut rows = vec![Row::base()];
    let mut truncated = None;
    for n in 1..=n_max {
        let len = row_counts(params, n).s;
        if len.to_usize().is_none_or(|l| l > entry_cap) {
            truncated = Some(Truncation {
                requested: n_max,
                last_generated: n - 1,
                next_len: len,
                cap: entry_cap,
            });
            break;
        }
        let row = match rows.last() {
            Some(prev) if n >= 2 => prev.next(params)?,
            _ => Row::first(),
        };
        rows.push(row);
    }
    Ok(GeneratedRows { rows, truncated })
}

/// Generates rows while they fit the cap; the depth is limited only by the cap.
pub fn generate_rows_until_cap(params: TriangleParams, entry_cap: usize) -> Result<Vec<Row>> {
    let mut n = 0;
    while row_counts(params, n + 1)
        .s
        .to_usize()
        .is_some_and(|l| l <= entry_cap)
    {
        n += 1;
    }
    Ok(generate_rows(params, n, entry_cap)?.rows)
}

/// Entry of a streamed row: values stay below `2^n`, so `u64` holds every row
/// that can be enumerated in practice.
pub type CompactEntry = (u64, Tag);

/// Lazily produces row `n+1` from an iterator over row `n` (which must have
/// at least two entries).
struct Descend<I: Iterator<Item = CompactEntry>> {
    src: std::iter::Peekable<I>,
    params: TriangleParams,
    prev: u64,
    pending: (u64, usize),
    started: bool,
    finished: bool,
}

impl<I: Iterator<Item = CompactEntry>> Iterator for Descend<I> {
    type Item = CompactEntry;

    fn next(&mut self) -> Option<CompactEntry> {
        if self.pending.1 > 0 {
            self.pending.1 -= 1;
            return Some((self.pending.0, Tag::B));
        }
        if !self.started {
            self.started = true;
            self.prev = self.src.next().expect("source row is non-empty").0;
            return Some((1, Tag::B));
        }
        match self.src.next() {
            Some((v, tag)) => {
                let sum = self.prev.checked_add(v).expect("entry value overflows u64");
                if self.src.peek().is_some() {
                    self.pending = (v, self.params.copies(tag));
                }
                self.prev = v;
                Some((sum, Tag::A))
            }
            None if !self.finished => {
                self.finished = true;
                Some((1, Tag::B))
            }
            None => None,
        }
    }
}

/// Value/type histogram of one row: how many entries carry each `(value, tag)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RowProfile {
    pub index: usize,
    /// `counts[v]` = number of (A, B) entries with value `v`.
    counts: Vec<[u64; 2]>,
}

impl RowProfile {
    fn record(&mut self, (v, tag): CompactEntry) {
        let v = v as usize;
        if v >= self.counts.len() {
            self.counts.resize(v + 1, [0, 0]);
        }
        self.counts[v][(tag == Tag::B) as usize] += 1;
    }

    /// Non-zero `(value, tag, count)` triples in increasing value order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, Tag, u64)> + '_ {
        self.counts.iter().enumerate().flat_map(|(v, c)| {
            [(Tag::A, c[0]), (Tag::B, c[1])]
                .into_iter()
                .filter(|&(_, n)| n > 0)
                .map(move |(t, n)| (v as u64, t, n))
        })
    }

    pub fn count(&self, tag: Tag) -> u64 {
        self.iter().filter(|e| e.1 == tag).map(|e| e.2).sum()
    }

    pub fn len(&self) -> u64 {
        self.iter().map(|e| e.2).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sum of `value^k` over entries of the given tag (or all entries).
    pub fn power_sum(&self, k: u32, tag: Option<Tag>) -> num_bigint::BigInt {
        self.iter()
            .filter(|e| tag.is_none_or(|t| t == e.1))
            .map(|(v, _, n)| num_bigint::BigInt::from(v).pow(k) * n)
            .sum()
    }

    pub fn max_value(&self) -> u64 {
        self.counts.len().saturating_sub(1) as u64
    }
}

impl From<&Row> for RowProfile {
    fn from(row: &Row) -> Self {
        let mut p = RowProfile {
            index: row.index,
            counts: Vec::new(),
        };
        for e in row.entries() {
            let v = e.value.to_u64().expect("entry value fits in u64");
            p.record((v, e.tag));
        }
        p
    }
}

/// Streams rows `0..=n_max` one vertex at a time without storing them, and
/// returns the profile of each row.
///
/// Memory use is independent of row length, so this reaches depths where the
/// rows themselves would not fit in memory.
pub fn stream_profiles(params: TriangleParams, n_max: usize) -> Vec<RowProfile> {
    use std::cell::RefCell;
    use std::rc::Rc;

    let profiles: Rc<RefCell<Vec<RowProfile>>> = Rc::new(RefCell::new(
        (0..=n_max)
            .map(|index| RowProfile {
                index,
                counts: Vec::new(),
            })
            .collect(),
    ));

    fn tapped<'a>(
        it: impl Iterator<Item = CompactEntry> + 'a,
        level: usize,
        sink: Rc<RefCell<Vec<RowProfile>>>,
    ) -> Box<dyn Iterator<Item = CompactEntry> + 'a> {
        Box::new(it.inspect(move |&e| sink.borrow_mut()[level].record(e)))
    }

    let mut stream = tapped(std::iter::once((1, Tag::B)), 0, profiles.clone());
    if n_max >= 1 {
        // row 0 has a single vertex; row 1 is the two wingers below it
        stream.for_each(drop);
        stream = tapped([(1, Tag::B), (1, Tag::B)].into_iter(), 1, profiles.clone());
    }
    for level in 2..=n_max {
        let descend = Descend {
            src: stream.peekable(),
            params,
            prev: 0,
            pending: (0, 0),
            started: false,
            finished: false,
        };
        stream = tapped(descend, level, profiles.clone());
    }
    stream.for_each(drop);
    Rc::try_unwrap(profiles)
        .expect("stream dropped")
        .into_inner()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(index: usize, s: &str) -> Row {
        let entries = s
            .split_whitespace()
            .map(|tok| {
                let (v, t) = tok.split_at(tok.len() - 1);
                Entry::new(v.parse::<u32>().unwrap(), t.parse().unwrap())
            })
            .collect();
        Row::new(index, entries).unwrap()
    }

    fn p(q: i64) -> TriangleParams {
        TriangleParams::new(q).unwrap()
    }

    #[test]
    fn q6_row3_from_row2() {
        let r2 = parse(2, "1B 2A 1B");
        assert_eq!(r2.next(p(6)).unwrap(), parse(3, "1B 3A 2B 2B 3A 1B"));
    }

    #[test]
    fn q5_row3_has_length_q() {
        let r3 = parse(2, "1B 2A 1B").next(p(5)).unwrap();
        assert_eq!(r3, parse(3, "1B 3A 2B 3A 1B"));
        assert_eq!(r3.len(), 5);
    }

    #[test]
    fn q6_row4() {
        let r4 = parse(3, "1B 3A 2B 2B 3A 1B").next(p(6)).unwrap();
        assert_eq!(
            r4,
            parse(4, "1B 4A 3B 3B 5A 2B 2B 2B 4A 2B 2B 2B 5A 3B 3B 4A 1B")
        );
        assert_eq!(r4.len(), 17);
    }

    #[test]
    fn rejects_small_q() {
        assert!(matches!(TriangleParams::new(4), Err(Error::InvalidQ(4))));
    }

    #[test]
    fn rejects_malformed_rows() {
        let bad = vec![
            Entry::new(1u32, Tag::B),
            Entry::new(2u32, Tag::A),
            Entry::new(2u32, Tag::B),
        ];
        assert!(Row::new(2, bad).is_err());
        let asym = vec![
            Entry::winger(),
            Entry::new(3u32, Tag::A),
            Entry::new(2u32, Tag::B),
            Entry::new(4u32, Tag::A),
            Entry::winger(),
        ];
        assert!(Row::new(3, asym).is_err());
        assert!(Row::base().next(p(6)).is_err());
    }

    #[test]
    fn generation_lengths() {
        let g = generate_rows(p(6), 2, DEFAULT_ENTRY_CAP).unwrap();
        let lens: Vec<_> = g.rows.iter().map(Row::len).collect();
        assert_eq!(lens, vec![1, 2, 3]);
        assert!(g.truncated.is_none());

        let g = generate_rows(p(7), 3, DEFAULT_ENTRY_CAP).unwrap();
        assert_eq!(g.rows[3].len(), 7);

        let g = generate_rows(p(9), 0, DEFAULT_ENTRY_CAP).unwrap();
        assert_eq!(g.rows, vec![Row::base()]);
    }

    #[test]
    fn truncation_is_reported() {
        let g = generate_rows(p(6), 10, 20).unwrap();
        assert_eq!(g.rows.len(), 5); // rows 0..=4, s_5 = 5*17 - 5*6 + 3 = 58
        let t = g.truncated.unwrap();
        assert_eq!(t.last_generated, 4);
        assert_eq!(t.next_len, BigUint::from(58u32));
    }

    #[test]
    fn streamed_profiles_match_materialised_rows() {
        for q in [5, 6, 9] {
            let rows = generate_rows(p(q), 6, DEFAULT_ENTRY_CAP).unwrap().rows;
            let profiles = stream_profiles(p(q), 6);
            for (r, prof) in rows.iter().zip(&profiles) {
                assert_eq!(&RowProfile::from(r), prof, "q={q} n={}", r.index());
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(row_counts(p(6), 3).s, BigUint::from(6u32));
        assert_eq!(row_counts(p(6), 4).s, BigUint::from(17u32));
        assert_eq!(row_counts(p(5), 2).s, BigUint::from(3u32));
        let c = row_counts(p(6), 4);
        assert_eq!((c.a, c.b), (BigUint::from(5u32), BigUint::from(12u32)));
    }
}
