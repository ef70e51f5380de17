//! Augmented diagrams, non-attacking fillings with permuted basements, and
//! their statistics.
//!
//! Squares use one-based Cartesian coordinates `(col, row)`; row 0 is the
//! basement. The reading order runs row by row from the top, and right to
//! left within a row.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::coeff::{BiPoly, RationalQT, Q};
use crate::error::{Error, Result};
use crate::symgroup::{Composition, Perm};
use crate::xpoly::{Monomial, XPoly};

/// A lattice square `(col, row)` of an augmented diagram.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Square {
    pub col: usize,
    pub row: usize,
}

impl Square {
    pub const fn new(col: usize, row: usize) -> Self {
        Self { col, row }
    }

    /// The square directly below, `d(u)`.
    pub fn below(&self) -> Square {
        Square::new(self.col, self.row - 1)
    }

    /// Position in the reading order.
    pub fn reading_cmp(&self, other: &Square) -> Ordering {
        other.row.cmp(&self.row).then(other.col.cmp(&self.col))
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// Same row, or adjacent rows with the lower square strictly to the right.
pub fn attacking(u: &Square, v: &Square) -> bool {
    if u == v {
        return false;
    }
    if u.row == v.row {
        return true;
    }
    let (upper, lower) = if u.row > v.row { (u, v) } else { (v, u) };
    upper.row == lower.row + 1 && lower.col > upper.col
}

pub fn in_diagram(mu: &Composition, u: &Square) -> bool {
    u.col >= 1 && u.col <= mu.len() && u.row >= 1 && u.row as u32 <= mu.part(u.col)
}

pub fn in_augmented(mu: &Composition, u: &Square) -> bool {
    u.col >= 1 && u.col <= mu.len() && u.row as u32 <= mu.part(u.col)
}

/// Squares of the column diagram `dg'(μ)` in reading order.
pub fn diagram_squares(mu: &Composition) -> Vec<Square> {
    let n = mu.len();
    (1..=mu.max_part() as usize)
        .rev()
        .flat_map(|row| (1..=n).rev().map(move |col| Square::new(col, row)))
        .filter(|u| in_diagram(mu, u))
        .collect()
}

/// Squares of the augmented diagram in reading order (basement last).
pub fn augmented_squares(mu: &Composition) -> Vec<Square> {
    let mut v = diagram_squares(mu);
    v.extend((1..=mu.len()).rev().map(|col| Square::new(col, 0)));
    v
}

/// `arm(u)`: the left arm in the same row over columns no taller than
/// `u`'s, and the right arm one row down over strictly shorter columns.
pub fn arm(mu: &Composition, u: &Square) -> Result<Vec<Square>> {
    if !in_diagram(mu, u) {
        return Err(Error::BoxOutsideDiagram { col: u.col, row: u.row });
    }
    let h = mu.part(u.col);
    let mut out: Vec<Square> = (1..u.col)
        .map(|c| Square::new(c, u.row))
        .filter(|v| in_diagram(mu, v) && mu.part(v.col) <= h)
        .collect();
    out.extend(
        (u.col + 1..=mu.len())
            .map(|c| Square::new(c, u.row - 1))
            .filter(|v| in_augmented(mu, v) && mu.part(v.col) < h),
    );
    Ok(out)
}

/// `(a(u), l(u))`.
pub fn arm_leg(mu: &Composition, u: &Square) -> Result<(usize, usize)> {
    let a = arm(mu, u)?.len();
    Ok((a, (mu.part(u.col) as usize) - u.row))
}

/// A triple `(u, v, w)` with `w = d(u)` and `v ∈ arm(u)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Triple {
    pub u: Square,
    pub v: Square,
    pub w: Square,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TripleKind {
    Inversion,
    Coinversion,
}

/// One triple per pair `(u, v ∈ arm(u))`.
pub fn triples(mu: &Composition) -> Vec<Triple> {
    diagram_squares(mu)
        .into_iter()
        .flat_map(|u| {
            arm(mu, &u)
                .expect("square of the diagram")
                .into_iter()
                .map(move |v| Triple { u, v, w: u.below() })
        })
        .collect()
}

/// A non-attacking filling of the augmented diagram of `shape`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AugFilling {
    shape: Composition,
    basement: Perm,
    /// `columns[c-1][r]` is the value at `(c, r)`; index 0 is the basement.
    columns: Vec<Vec<usize>>,
}

impl AugFilling {
    /// Builds a filling from the values of each column, listed bottom-up from
    /// row 1, and checks that it is non-attacking.
    pub fn new(shape: Composition, basement: Perm, columns: Vec<Vec<usize>>) -> Result<Self> {
        let n = shape.len();
        if basement.len() != n || (n > 0 && basement.start() != 1) {
            return Err(Error::LengthMismatch { expected: n, found: basement.len() });
        }
        if columns.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: columns.len() });
        }
        let mut full = Vec::with_capacity(n);
        for (c, col) in columns.into_iter().enumerate() {
            if col.len() != shape.0[c] as usize {
                return Err(Error::LengthMismatch { expected: shape.0[c] as usize, found: col.len() });
            }
            if let Some(&bad) = col.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::IndexOutOfRange { index: bad, max: n });
            }
            let mut v = vec![basement.apply(c + 1)];
            v.extend(col);
            full.push(v);
        }
        let f = Self { shape, basement, columns: full };
        if let Some((u, v)) = f.first_attack() {
            return Err(Error::Attacking(u.to_string(), v.to_string()));
        }
        Ok(f)
    }

    fn first_attack(&self) -> Option<(Square, Square)> {
        let sq = augmented_squares(&self.shape);
        sq.iter()
            .tuple_combinations()
            .find(|(u, v)| attacking(u, v) && self.value(u) == self.value(v))
            .map(|(u, v)| (*u, *v))
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn basement(&self) -> &Perm {
        &self.basement
    }

    pub fn n(&self) -> usize {
        self.shape.len()
    }

    pub fn value(&self, u: &Square) -> usize {
        self.columns[u.col - 1][u.row]
    }

    /// Column values bottom-up from row 1.
    pub fn column(&self, col: usize) -> &[usize] {
        &self.columns[col - 1][1..]
    }

    /// Exponent vector of `x^σ`.
    pub fn weight(&self) -> Vec<u32> {
        let mut e = vec![0u32; self.n()];
        for col in &self.columns {
            for &v in &col[1..] {
                e[v - 1] += 1;
            }
        }
        e
    }

    /// `σ'(u) = n + 1 - σ(u)` on every square, basement included.
    pub fn value_complement(&self) -> AugFilling {
        let n1 = self.n() + 1;
        AugFilling {
            shape: self.shape.clone(),
            basement: self.basement.complement(),
            columns: self.columns.iter().map(|c| c.iter().map(|&v| n1 - v).collect()).collect(),
        }
    }

    /// Rows top to bottom, basement last; `.` marks squares outside the
    /// diagram.
    pub fn render(&self) -> String {
        let n = self.n();
        let width = n.to_string().len();
        let height = self.shape.max_part() as usize;
        let mut lines = Vec::new();
        for row in (0..=height).rev() {
            let cells: Vec<String> = (1..=n)
                .map(|c| {
                    let u = Square::new(c, row);
                    if in_augmented(&self.shape, &u) {
                        format!("{:>width$}", self.value(&u))
                    } else {
                        format!("{:>width$}", ".")
                    }
                })
                .collect();
            if row == 0 {
                lines.push("-".repeat(n * (width + 1) - 1));
            }
            lines.push(cells.join(" "));
        }
        lines.join("\n")
    }

    /// TikZ picture in the style of the usual column-diagram figures.
    pub fn to_tikz(&self) -> String {
        let mut s = String::from("\\begin{tikzpicture}[scale=0.5]\n");
        for u in augmented_squares(&self.shape) {
            let (x, y) = (u.col - 1, u.row);
            s.push_str(&format!(
                "  \\draw ({x},{}) rectangle ++(1,-1);\n  \\node at ({x}.5,{y}.5) {{{}}};\n",
                y + 1,
                self.value(&u)
            ));
        }
        s.push_str("\\end{tikzpicture}\n");
        s
    }
}

#[derive(Serialize)]
struct FillingJson<'a> {
    shape: &'a [u32],
    basement: &'a [usize],
    columns: Vec<&'a [usize]>,
}

impl Serialize for AugFilling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FillingJson {
            shape: self.shape.parts(),
            basement: self.basement.images(),
            columns: (1..=self.n()).map(|c| self.column(c)).collect(),
        }
        .serialize(s)
    }
}

impl fmt::Display for AugFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Depth-first enumeration of `NAF_μ^π` in reading order with values tried
/// in increasing order.
pub struct NafIter {
    shape: Composition,
    basement: Perm,
    squares: Vec<Square>,
    /// earlier squares (by index) attacking each square
    conflicts: Vec<Vec<usize>>,
    /// basement values attacking each square
    forbidden: Vec<Vec<usize>>,
    values: Vec<usize>,
    pos: usize,
    started: bool,
    done: bool,
}

impl NafIter {
    fn new(shape: Composition, basement: Perm) -> Self {
        let squares = diagram_squares(&shape);
        let index: BTreeMap<(usize, usize), usize> =
            squares.iter().enumerate().map(|(k, u)| ((u.col, u.row), k)).collect();
        let n = shape.len();
        let mut conflicts = Vec::with_capacity(squares.len());
        let mut forbidden = Vec::with_capacity(squares.len());
        for (k, u) in squares.iter().enumerate() {
            let mut c = Vec::new();
            for (j, v) in squares[..k].iter().enumerate() {
                if attacking(u, v) {
                    c.push(j);
                }
            }
            conflicts.push(c);
            let f = if u.row == 1 {
                (u.col + 1..=n).map(|c| basement.apply(c)).collect()
            } else {
                Vec::new()
            };
            forbidden.push(f);
        }
        debug_assert_eq!(index.len(), squares.len());
        let len = squares.len();
        Self { shape, basement, squares, conflicts, forbidden, values: vec![0; len], pos: 0, started: false, done: false }
    }

    fn admissible(&self, k: usize, v: usize) -> bool {
        !self.forbidden[k].contains(&v) && self.conflicts[k].iter().all(|&j| self.values[j] != v)
    }

    fn current(&self) -> AugFilling {
        let n = self.shape.len();
        let mut columns: Vec<Vec<usize>> = (1..=n).map(|c| vec![self.basement.apply(c)]).collect();
        // squares come top-down, so fill each column from its top
        for c in columns.iter_mut().zip(&self.shape.0) {
            c.0.resize(*c.1 as usize + 1, 0);
        }
        for (u, &v) in self.squares.iter().zip(&self.values) {
            columns[u.col - 1][u.row] = v;
        }
        AugFilling { shape: self.shape.clone(), basement: self.basement.clone(), columns }
    }
}

impl Iterator for NafIter {
    type Item = AugFilling;

    fn next(&mut self) -> Option<AugFilling> {
        if self.done {
            return None;
        }
        let len = self.squares.len();
        if len == 0 {
            self.done = true;
            return Some(self.current());
        }
        if self.started {
            self.pos = len - 1;
        }
        self.started = true;
        let n = self.shape.len();
        loop {
            let mut v = self.values[self.pos] + 1;
            while v <= n && !self.admissible(self.pos, v) {
                v += 1;
            }
            if v <= n {
                self.values[self.pos] = v;
                if self.pos + 1 == len {
                    return Some(self.current());
                }
                self.pos += 1;
                self.values[self.pos] = 0;
            } else {
                self.values[self.pos] = 0;
                if self.pos == 0 {
                    self.done = true;
                    return None;
                }
                self.pos -= 1;
            }
        }
    }
}

/// All non-attacking fillings of `μ` with basement `π` (a permutation of
/// `[1, n]`).
pub fn enumerate_naf(mu: &Composition, pi: &Perm) -> Result<NafIter> {
    if pi.len() != mu.len() || (!pi.is_empty() && pi.start() != 1) {
        return Err(Error::LengthMismatch { expected: mu.len(), found: pi.len() });
    }
    Ok(NafIter::new(mu.clone(), pi.clone()))
}

/// Statistics of an augmented filling.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FillingStats {
    pub maj: i64,
    pub maj_prime: i64,
    pub inv: i64,
    pub coinv: i64,
    pub coinv_prime: i64,
    /// `|Inv(σ̂)|`
    pub inv_set_size: i64,
    pub des: Vec<Square>,
    pub asc: Vec<Square>,
    /// `Σ a(u)` over all squares of the diagram
    pub arm_total: i64,
}

pub fn filling_stats(f: &AugFilling) -> FillingStats {
    let mu = f.shape();
    let sq = augmented_squares(mu);
    let mut des = Vec::new();
    let mut asc = Vec::new();
    let (mut maj, mut maj_prime, mut des_arm, mut arm_total, mut unequal_arm) = (0i64, 0i64, 0i64, 0i64, 0i64);
    for u in diagram_squares(mu) {
        let (a, l) = arm_leg(mu, &u).expect("square of the diagram");
        let (a, l) = (a as i64, l as i64);
        arm_total += a;
        let (x, y) = (f.value(&u), f.value(&u.below()));
        match x.cmp(&y) {
            Ordering::Greater => {
                des.push(u);
                maj += l + 1;
                des_arm += a;
                unequal_arm += a;
            }
            Ordering::Less => {
                asc.push(u);
                maj_prime += l + 1;
                unequal_arm += a;
            }
            Ordering::Equal => {}
        }
    }
    // squares are listed in reading order, so earlier index = earlier square
    let inv_set_size = sq
        .iter()
        .tuple_combinations()
        .filter(|(u, v)| attacking(u, v) && f.value(u) > f.value(v))
        .count() as i64;
    let n = f.n();
    let basement_pairs = (1..=n)
        .tuple_combinations()
        .filter(|&(i, j)| mu.part(i) <= mu.part(j) && f.basement().apply(i) < f.basement().apply(j))
        .count() as i64;
    let inv = inv_set_size - basement_pairs - des_arm;
    let coinv = arm_total - inv;
    FillingStats {
        maj,
        maj_prime,
        inv,
        coinv,
        coinv_prime: unequal_arm - coinv,
        inv_set_size,
        des,
        asc,
        arm_total,
    }
}

fn chi(f: &AugFilling, x: &Square, y: &Square) -> i64 {
    i64::from(f.value(x) > f.value(y))
}

/// `χ_uv + χ_vw - χ_uw`.
pub fn triple_chi_sum(f: &AugFilling, t: &Triple) -> i64 {
    chi(f, &t.u, &t.v) + chi(f, &t.v, &t.w) - chi(f, &t.u, &t.w)
}

pub fn classify_triple(f: &AugFilling, t: &Triple) -> TripleKind {
    if triple_chi_sum(f, t) == 1 {
        TripleKind::Inversion
    } else {
        TripleKind::Coinversion
    }
}

/// The complement map `f`: small values (`≤ m`) go through `π_1^c ∘ π_1⁻¹`,
/// large ones through `π_2^c ∘ π_2⁻¹`, and the basement becomes `π_1^c π_2^c`.
pub fn complement_filling(f: &AugFilling, m: usize) -> Result<AugFilling> {
    let (p1, p2) = f.basement().split_at(m)?;
    let (c1, c2) = (p1.complement(), p2.complement());
    let (i1, i2) = (p1.inverse(), p2.inverse());
    let map = |v: usize| if v <= m { c1.apply(i1.apply(v)) } else { c2.apply(i2.apply(v)) };
    let basement = Perm::concat(&c1, &c2)?;
    let columns = f.columns.iter().map(|col| col.iter().map(|&v| map(v)).collect()).collect();
    Ok(AugFilling { shape: f.shape.clone(), basement, columns })
}

/// Number of non-basement squares holding a value larger than `m`.
pub fn large_count(f: &AugFilling, m: usize) -> usize {
    f.columns.iter().flat_map(|c| &c[1..]).filter(|&&v| v > m).count()
}

/// The signed column walk behind the `maj` transfer: over squares `u` of
/// column `col` whose value and the one below lie on opposite sides of `m`,
/// add `l(u)+1` at descents and subtract it at ascents.
pub fn column_transfer(f: &AugFilling, m: usize, col: usize) -> i64 {
    let h = f.shape().part(col) as usize;
    let mut total = 0i64;
    for row in 1..=h {
        let (x, y) = (f.columns[col - 1][row], f.columns[col - 1][row - 1]);
        if (x <= m) == (y <= m) {
            continue;
        }
        let leg = (h - row) as i64 + 1;
        if x > y {
            total += leg;
        } else {
            total -= leg;
        }
    }
    total
}

/// `∏ (1-t) / (1 - q^{l+1} t^{a+1})` over squares differing from the one
/// below, times `q^maj_exp t^coinv_exp`.
fn weight_coefficient(f: &AugFilling, maj_exp: i64, coinv_exp: i64) -> RationalQT {
    let mu = f.shape();
    let mut den = BiPoly::one();
    let mut k = 0u32;
    for u in diagram_squares(mu) {
        if f.value(&u) != f.value(&u.below()) {
            let (a, l) = arm_leg(mu, &u).expect("square of the diagram");
            den = &den * &(&BiPoly::one() - &BiPoly::monomial(Q::one(), l as u32 + 1, a as u32 + 1));
            k += 1;
        }
    }
    let one_minus_t = &BiPoly::one() - &BiPoly::t();
    let num = one_minus_t.pow(k).shift(maj_exp as u32, coinv_exp as u32);
    // (1-t) and q^i t^j share no factor with any 1 - q^{l+1} t^{a+1}
    RationalQT::from_coprime(num, den)
}

/// `(x^σ, q^maj t^coinv ∏ (1-t)/(1-q^{l+1}t^{a+1}))`.
pub fn term_weight(f: &AugFilling) -> (Vec<u32>, RationalQT) {
    let s = filling_stats(f);
    assert!(s.maj >= 0 && s.coinv >= 0, "negative statistic on a non-attacking filling");
    (f.weight(), weight_coefficient(f, s.maj, s.coinv))
}

/// The same weight with `maj'` and `coinv'` in place of `maj` and `coinv`.
pub fn opposite_term_weight(f: &AugFilling) -> (Vec<u32>, RationalQT) {
    let s = filling_stats(f);
    assert!(s.maj_prime >= 0 && s.coinv_prime >= 0, "negative statistic on a non-attacking filling");
    (f.weight(), weight_coefficient(f, s.maj_prime, s.coinv_prime))
}

/// Sums term weights over fillings, grouping by monomial.
pub(crate) fn sum_weights<I: IntoIterator<Item = (Vec<u32>, RationalQT)>>(n: usize, terms: I) -> XPoly {
    let mut groups: BTreeMap<Monomial, Vec<RationalQT>> = BTreeMap::new();
    for (e, c) in terms {
        groups.entry(Monomial(e)).or_default().push(c);
    }
    XPoly::from_grouped(n, groups)
}

/// The filling pictured in the worked statistics example: shape
/// `(3,2,2,1,2,3)` with basement `132645`.
pub fn worked_example_filling() -> AugFilling {
    AugFilling::new(
        Composition(vec![3, 2, 2, 1, 2, 3]),
        "132645".parse().expect("valid permutation"),
        vec![vec![1, 1, 5], vec![3, 3], vec![2, 2], vec![6], vec![4, 6], vec![5, 4, 1]],
    )
    .expect("non-attacking")
}
