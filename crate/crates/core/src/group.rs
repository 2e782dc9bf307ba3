//! Finite groups given by full multiplication tables.
//!
//! Elements are indices `0..order`. Abelian groups `Z_{f0} x Z_{f1} x ...` use a
//! mixed-radix encoding with the last factor varying fastest, so the vector
//! `(v0, v1, ..., vr)` has index `((v0 * f1 + v1) * f2 + v2) ...`. Semidirect
//! products `<a, x | a^m = x^n = 1, a^-1 x a = x^t>` encode `x^i a^j` as
//! `i * m + j`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Constructor metadata carried by a [`FiniteGroup`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    /// Direct sum of cyclic groups with the given orders.
    Abelian { factors: Vec<usize> },
    /// `Z_n` extended by `Z_m`, with `a^-1 x a = x^t`.
    Semidirect { n: usize, m: usize, t: usize },
    /// Direct product of two groups that are not both abelian.
    Product(Box<GroupKind>, Box<GroupKind>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    kind: GroupKind,
    names: Vec<String>,
}

/// An element of a [`FiniteGroup`], with its residue vector when the group is abelian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    pub index: usize,
    pub vector: Option<Vec<usize>>,
}

const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 64;

impl FiniteGroup {
    /// Direct sum `Z_{f0} + Z_{f1} + ...`.
    pub fn abelian(factors: &[usize]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter(
                "an abelian group needs at least one cyclic factor".into(),
            ));
        }
        if let Some(&f) = factors.iter().find(|&&f| f < 2) {
            return Err(Error::InvalidParameter(format!(
                "cyclic factor {f} is smaller than 2"
            )));
        }
        let order = factors
            .iter()
            .try_fold(1usize, |acc, &f| acc.checked_mul(f))
            .ok_or_else(|| Error::InvalidParameter("group order overflows".into()))?;

        let vectors: Vec<Vec<usize>> = (0..order).map(|i| decode_mixed_radix(i, factors)).collect();
        let mut table = vec![0; order * order];
        for g in 0..order {
            for h in 0..order {
                let sum: Vec<usize> = vectors[g]
                    .iter()
                    .zip(&vectors[h])
                    .zip(factors)
                    .map(|((a, b), f)| (a + b) % f)
                    .collect();
                table[g * order + h] = encode_mixed_radix(&sum, factors);
            }
        }
        let names = vectors
            .iter()
            .map(|v| {
                if v.len() == 1 {
                    v[0].to_string()
                } else {
                    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                    format!("({})", parts.join(","))
                }
            })
            .collect();
        Self::from_table(
            order,
            table,
            GroupKind::Abelian {
                factors: factors.to_vec(),
            },
            names,
        )
    }

    /// `<a, x | a^m = x^n = 1, a^-1 x a = x^t>` of order `n * m`.
    pub fn semidirect(n: usize, m: usize, t: i64) -> Result<Self> {
        if n < 2 || m < 2 {
            return Err(Error::InvalidParameter(format!(
                "semidirect product needs n >= 2 and m >= 2 (got n = {n}, m = {m})"
            )));
        }
        let t = t.rem_euclid(n as i64) as usize;
        if t.gcd(&n) != 1 {
            return Err(Error::InvalidAction(format!(
                "t = {t} is not a unit modulo {n}"
            )));
        }
        if pow_mod(t, m as u64, n) != 1 % n {
            return Err(Error::InvalidAction(format!(
                "t^m = {t}^{m} is not 1 modulo {n}"
            )));
        }
        let order = n
            .checked_mul(m)
            .ok_or_else(|| Error::InvalidParameter("group order overflows".into()))?;
        // a^j x^k = x^(k s^j) a^j with s = t^-1 mod n.
        let s = pow_mod(t, (m - 1) as u64, n);
        let mut s_pow = vec![1 % n; m];
        for j in 1..m {
            s_pow[j] = s_pow[j - 1] * s % n;
        }
        let mut table = vec![0; order * order];
        for g in 0..order {
            let (i, j) = (g / m, g % m);
            for h in 0..order {
                let (k, l) = (h / m, h % m);
                let xi = (i + k * s_pow[j]) % n;
                let aj = (j + l) % m;
                table[g * order + h] = xi * m + aj;
            }
        }
        let names = (0..order)
            .map(|g| {
                let (i, j) = (g / m, g % m);
                let mut name = String::new();
                match i {
                    0 => {}
                    1 => name.push('x'),
                    _ => name.push_str(&format!("x^{i}")),
                }
                match j {
                    0 => {}
                    1 => name.push('a'),
                    _ => name.push_str(&format!("a^{j}")),
                }
                if name.is_empty() {
                    name.push('e');
                }
                name
            })
            .collect();
        Self::from_table(order, table, GroupKind::Semidirect { n, m, t }, names)
    }

    /// Direct product with pairs `(g, h)` numbered `g * |H| + h`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<Self> {
        let order = self.order * other.order;
        let mut table = vec![0; order * order];
        for a in 0..order {
            let (g1, h1) = (a / other.order, a % other.order);
            for b in 0..order {
                let (g2, h2) = (b / other.order, b % other.order);
                table[a * order + b] = self.op(g1, g2) * other.order + other.op(h1, h2);
            }
        }
        let kind = match (&self.kind, &other.kind) {
            (GroupKind::Abelian { factors: f1 }, GroupKind::Abelian { factors: f2 }) => {
                GroupKind::Abelian {
                    factors: f1.iter().chain(f2).copied().collect(),
                }
            }
            (k1, k2) => GroupKind::Product(Box::new(k1.clone()), Box::new(k2.clone())),
        };
        let names = match &kind {
            GroupKind::Abelian { factors } => (0..order)
                .map(|i| {
                    let parts: Vec<String> = decode_mixed_radix(i, factors)
                        .iter()
                        .map(|c| c.to_string())
                        .collect();
                    format!("({})", parts.join(","))
                })
                .collect(),
            _ => (0..order)
                .map(|i| {
                    format!(
                        "({},{})",
                        self.names[i / other.order],
                        other.names[i % other.order]
                    )
                })
                .collect(),
        };
        Self::from_table(order, table, kind, names)
    }

    fn from_table(
        order: usize,
        table: Vec<usize>,
        kind: GroupKind,
        names: Vec<String>,
    ) -> Result<Self> {
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| table[e * order + g] == g && table[g * order + e] == g))
            .ok_or_else(|| {
                Error::InvalidParameter("multiplication table has no identity".into())
            })?;
        let mut inverses = vec![usize::MAX; order];
        for g in 0..order {
            inverses[g] = (0..order)
                .find(|&h| table[g * order + h] == identity)
                .ok_or_else(|| Error::InvalidParameter(format!("element {g} has no inverse")))?;
        }
        let group = FiniteGroup {
            order,
            table,
            identity,
            inverses,
            kind,
            names,
        };
        group.check_axioms()?;
        Ok(group)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        let mut seen = vec![usize::MAX; n];
        for g in 0..n {
            for h in 0..n {
                let p = self.op(g, h);
                if seen[p] == g {
                    return Err(Error::InvalidParameter(format!(
                        "row {g} of the multiplication table repeats {p}"
                    )));
                }
                seen[p] = g;
            }
        }
        let mut seen = vec![usize::MAX; n];
        for h in 0..n {
            for g in 0..n {
                let p = self.op(g, h);
                if seen[p] == h {
                    return Err(Error::InvalidParameter(format!(
                        "column {h} of the multiplication table repeats {p}"
                    )));
                }
                seen[p] = h;
            }
        }
        for g in 0..n {
            if self.op(g, self.inverses[g]) != self.identity {
                return Err(Error::InvalidParameter(format!("bad inverse for {g}")));
            }
        }
        let sample: Vec<usize> = if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            (0..n).collect()
        } else {
            let stride = n.div_ceil(EXHAUSTIVE_ASSOCIATIVITY_LIMIT);
            (0..n).step_by(stride).chain([n - 1]).collect()
        };
        for &a in &sample {
            for &b in &sample {
                let ab = self.op(a, b);
                for &c in &sample {
                    if self.op(ab, c) != self.op(a, self.op(b, c)) {
                        return Err(Error::InvalidParameter(format!(
                            "associativity fails for ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Unchecked product lookup; panics on foreign indices.
    #[inline]
    pub fn op(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order + h]
    }

    #[inline]
    pub fn inverse_of(&self, g: usize) -> usize {
        self.inverses[g]
    }

    /// `g^k` (or `k g` additively) without bounds checks.
    pub fn pow(&self, g: usize, k: i64) -> usize {
        let (base, mut e) = if k < 0 {
            (self.inverses[g], k.unsigned_abs())
        } else {
            (g, k as u64)
        };
        let mut result = self.identity;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                result = self.op(result, sq);
            }
            sq = self.op(sq, sq);
            e >>= 1;
        }
        result
    }

    fn check(&self, g: usize) -> Result<usize> {
        if g < self.order {
            Ok(g)
        } else {
            Err(Error::InvalidElement {
                index: g,
                order: self.order,
            })
        }
    }

    pub fn mul(&self, g: usize, h: usize) -> Result<usize> {
        Ok(self.op(self.check(g)?, self.check(h)?))
    }

    pub fn inv(&self, g: usize) -> Result<usize> {
        Ok(self.inverses[self.check(g)?])
    }

    pub fn power(&self, g: usize, k: i64) -> Result<usize> {
        Ok(self.pow(self.check(g)?, k))
    }

    /// Least `k >= 1` with `g^k = e`.
    pub fn element_order(&self, g: usize) -> Result<usize> {
        let g = self.check(g)?;
        let mut k = 1;
        let mut x = g;
        while x != self.identity {
            x = self.op(x, g);
            k += 1;
        }
        Ok(k)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|g| (g + 1..self.order).all(|h| self.op(g, h) == self.op(h, g)))
    }

    pub fn element(&self, index: usize) -> Result<GroupElement> {
        let index = self.check(index)?;
        let vector = match &self.kind {
            GroupKind::Abelian { factors } => Some(decode_mixed_radix(index, factors)),
            _ => None,
        };
        Ok(GroupElement { index, vector })
    }

    /// Index of a residue vector in an abelian group; components are reduced modulo
    /// their factor.
    pub fn from_vector(&self, vector: &[i64]) -> Result<usize> {
        match &self.kind {
            GroupKind::Abelian { factors } if factors.len() == vector.len() => {
                let reduced: Vec<usize> = vector
                    .iter()
                    .zip(factors)
                    .map(|(&v, &f)| v.rem_euclid(f as i64) as usize)
                    .collect();
                Ok(encode_mixed_radix(&reduced, factors))
            }
            GroupKind::Abelian { factors } => Err(Error::Parse(format!(
                "expected a vector with {} components, got {}",
                factors.len(),
                vector.len()
            ))),
            _ => Err(Error::UnsupportedFeature(
                "vector form exists only for abelian groups".into(),
            )),
        }
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    /// Parses an element: integers or `(v0,v1,...)` tuples with optional leading `-`
    /// for abelian groups, words in `a`, `x` with `^k` exponents for semidirect
    /// products.
    pub fn parse_element(&self, text: &str) -> Result<usize> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let text = text.to_ascii_lowercase();
        if text.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        match &self.kind {
            GroupKind::Abelian { factors } => {
                let (negate, body) = match text.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, text.as_str()),
                };
                let mut vector: Vec<i64> =
                    if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
                        inner
                            .split(',')
                            .map(|c| {
                                c.parse::<i64>()
                                    .map_err(|_| Error::Parse(format!("bad component {c:?}")))
                            })
                            .collect::<Result<_>>()?
                    } else if factors.len() == 1 {
                        vec![body
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad element {text:?}")))?]
                    } else {
                        return Err(Error::Parse(format!(
                            "element {text:?} must be a tuple with {} components",
                            factors.len()
                        )));
                    };
                if negate {
                    vector.iter_mut().for_each(|v| *v = -*v);
                }
                self.from_vector(&vector)
            }
            GroupKind::Semidirect { m, .. } => {
                let a = 1;
                let x = *m;
                let mut parser = WordParser {
                    group: self,
                    chars: text.as_bytes(),
                    pos: 0,
                    a,
                    x,
                };
                let g = parser.word()?;
                if parser.pos != parser.chars.len() {
                    return Err(Error::Parse(format!(
                        "unexpected {:?} in {text:?}",
                        parser.chars[parser.pos] as char
                    )));
                }
                Ok(g)
            }
            GroupKind::Product(..) => Err(Error::UnsupportedFeature(
                "element syntax for mixed direct products".into(),
            )),
        }
    }
}

struct WordParser<'a> {
    group: &'a FiniteGroup,
    chars: &'a [u8],
    pos: usize,
    a: usize,
    x: usize,
}

impl WordParser<'_> {
    fn word(&mut self) -> Result<usize> {
        let mut acc = self.group.identity;
        while let Some(&c) = self.chars.get(self.pos) {
            match c {
                b')' => break,
                b'*' | b'.' => self.pos += 1,
                _ => {
                    let f = self.factor()?;
                    acc = self.group.op(acc, f);
                }
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<usize> {
        let atom = match self.chars[self.pos] {
            b'a' => {
                self.pos += 1;
                self.a
            }
            b'x' => {
                self.pos += 1;
                self.x
            }
            b'e' | b'1' => {
                self.pos += 1;
                self.group.identity
            }
            b'(' => {
                self.pos += 1;
                let w = self.word()?;
                if self.chars.get(self.pos) != Some(&b')') {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                self.pos += 1;
                w
            }
            c => return Err(Error::Parse(format!("unexpected {:?} in word", c as char))),
        };
        if self.chars.get(self.pos) == Some(&b'^') {
            self.pos += 1;
            let start = self.pos;
            if self.chars.get(self.pos) == Some(&b'-') {
                self.pos += 1;
            }
            while self.chars.get(self.pos).is_some_and(u8::is_ascii_digit) {
                self.pos += 1;
            }
            let digits = std::str::from_utf8(&self.chars[start..self.pos]).unwrap_or_default();
            let k: i64 = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent {digits:?}")))?;
            return Ok(self.group.pow(atom, k));
        }
        Ok(atom)
    }
}

fn decode_mixed_radix(mut index: usize, factors: &[usize]) -> Vec<usize> {
    let mut v = vec![0; factors.len()];
    for (slot, &f) in v.iter_mut().zip(factors).rev() {
        *slot = index % f;
        index /= f;
    }
    v
}

fn encode_mixed_radix(v: &[usize], factors: &[usize]) -> usize {
    v.iter().zip(factors).fold(0, |acc, (&c, &f)| acc * f + c)
}

fn pow_mod(base: usize, mut e: u64, n: usize) -> usize {
    let mut result = 1 % n;
    let mut b = base % n;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % n;
        }
        b = b * b % n;
        e >>= 1;
    }
    result
}

/// Parsed form of the group mini-language: `Z9`, `Z3xZ3`, `SD(7,3,2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Abelian(Vec<usize>),
    Semidirect { n: usize, m: usize, t: i64 },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Abelian(factors) => FiniteGroup::abelian(factors),
            GroupSpec::Semidirect { n, m, t } => FiniteGroup::semidirect(*n, *m, *t),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_ascii_lowercase();
        if let Some(args) = text.strip_prefix("sd(").and_then(|r| r.strip_suffix(')')) {
            let parts: Vec<&str> = args.split(',').collect();
            if parts.len() != 3 {
                return Err(Error::Parse(format!("SD needs three arguments: {s:?}")));
            }
            let bad = |p: &str| Error::Parse(format!("bad SD argument {p:?}"));
            let n = parts[0].parse().map_err(|_| bad(parts[0]))?;
            let m = parts[1].parse().map_err(|_| bad(parts[1]))?;
            let t = parts[2].parse().map_err(|_| bad(parts[2]))?;
            return Ok(GroupSpec::Semidirect { n, m, t });
        }
        let factors = text
            .split('x')
            .map(|f| {
                f.strip_prefix('z')
                    .and_then(|d| d.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad group factor {f:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupSpec::Abelian(factors))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Abelian(factors) => {
                let parts: Vec<String> = factors.iter().map(|k| format!("Z{k}")).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupSpec::Semidirect { n, m, t } => write!(f, "SD({n},{m},{t})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_nine() {
        let g = FiniteGroup::abelian(&[9]).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(g.element_order(1).unwrap(), 9);
        assert_eq!(g.power(1, 10).unwrap(), 1);
        assert_eq!(g.element_order(g.identity()).unwrap(), 1);
    }

    #[test]
    fn elementary_abelian() {
        let g = FiniteGroup::abelian(&[3, 3]).unwrap();
        assert_eq!(g.order(), 9);
        for e in g.elements().filter(|&e| e != g.identity()) {
            assert_eq!(g.element_order(e).unwrap(), 3);
        }
    }

    #[test]
    fn z3_times_z5_is_cyclic() {
        let g = FiniteGroup::abelian(&[3, 5]).unwrap();
        let one_one = g.from_vector(&[1, 1]).unwrap();
        // repeated addition of (1,1) reaches the identity only after 15 steps
        let mut x = one_one;
        let mut k = 1;
        while x != g.identity() {
            x = g.op(x, one_one);
            k += 1;
        }
        assert_eq!(k, 15);
        assert_eq!(g.element_order(one_one).unwrap(), 15);
    }

    #[test]
    fn small_factor_rejected() {
        assert!(matches!(
            FiniteGroup::abelian(&[3, 1]),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn order_21_presentation() {
        let g = FiniteGroup::semidirect(7, 3, 2).unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
        let a = g.parse_element("a").unwrap();
        let x = g.parse_element("x").unwrap();
        assert_eq!(a, 1);
        assert_eq!(x, 3);
        assert_eq!(g.element_order(a).unwrap(), 3);
        assert_eq!(g.element_order(x).unwrap(), 7);
        // a^-1 x a = x^2
        let conj = g.op(g.op(g.inverse_of(a), x), a);
        assert_eq!(conj, g.pow(x, 2));
        assert_ne!(g.mul(a, x).unwrap(), g.mul(x, a).unwrap());
    }

    #[test]
    fn symmetric_group_of_degree_three() {
        let g = FiniteGroup::semidirect(3, 2, 2).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
    }

    #[test]
    fn trivial_action_is_direct() {
        let g = FiniteGroup::semidirect(5, 4, 1).unwrap();
        assert_eq!(g.order(), 20);
        assert!(g.is_abelian());
    }

    #[test]
    fn bad_action_rejected() {
        assert!(matches!(
            FiniteGroup::semidirect(7, 3, 3),
            Err(Error::InvalidAction(_))
        ));
        assert!(matches!(
            FiniteGroup::semidirect(6, 2, 3),
            Err(Error::InvalidAction(_))
        ));
    }

    #[test]
    fn negative_power_is_inverse() {
        let g = FiniteGroup::abelian(&[7]).unwrap();
        assert_eq!(g.power(1, -1).unwrap(), 6);
        assert_eq!(g.power(3, 0).unwrap(), g.identity());
    }

    #[test]
    fn foreign_element() {
        let g = FiniteGroup::abelian(&[5]).unwrap();
        assert_eq!(
            g.mul(5, 1),
            Err(Error::InvalidElement { index: 5, order: 5 })
        );
        assert!(g.inv(9).is_err());
        assert!(g.power(7, 2).is_err());
    }

    #[test]
    fn lagrange() {
        for g in [
            FiniteGroup::abelian(&[3, 5]).unwrap(),
            FiniteGroup::semidirect(7, 3, 2).unwrap(),
            FiniteGroup::abelian(&[2, 4, 3]).unwrap(),
        ] {
            for e in g.elements() {
                assert_eq!(g.pow(e, g.order() as i64), g.identity());
                assert_eq!(g.order() % g.element_order(e).unwrap(), 0);
            }
        }
    }

    #[test]
    fn vector_round_trip() {
        let g = FiniteGroup::abelian(&[3, 5, 2]).unwrap();
        for i in g.elements() {
            let el = g.element(i).unwrap();
            let v: Vec<i64> = el.vector.unwrap().iter().map(|&c| c as i64).collect();
            assert_eq!(g.from_vector(&v).unwrap(), i);
        }
    }

    #[test]
    fn larger_groups_use_sampled_associativity() {
        let g = FiniteGroup::abelian(&[9, 9]).unwrap();
        assert_eq!(g.order(), 81);
        let h = FiniteGroup::semidirect(13, 3, 3).unwrap();
        assert_eq!(h.order(), 39);
        assert!(!h.is_abelian());
    }

    #[test]
    fn direct_product_with_z2() {
        let g = FiniteGroup::abelian(&[9]).unwrap();
        let z2 = FiniteGroup::abelian(&[2]).unwrap();
        let p = g.direct_product(&z2).unwrap();
        assert_eq!(
            p.kind(),
            &GroupKind::Abelian {
                factors: vec![9, 2]
            }
        );
        assert_eq!(p.from_vector(&[4, 1]).unwrap(), 4 * 2 + 1);
        let q = FiniteGroup::semidirect(7, 3, 2)
            .unwrap()
            .direct_product(&z2)
            .unwrap();
        assert_eq!(q.order(), 42);
        assert!(!q.is_abelian());
    }

    #[test]
    fn parse_specs() {
        assert_eq!(
            "Z9".parse::<GroupSpec>().unwrap(),
            GroupSpec::Abelian(vec![9])
        );
        assert_eq!(
            " z3 X z3 ".parse::<GroupSpec>().unwrap(),
            GroupSpec::Abelian(vec![3, 3])
        );
        assert_eq!(
            "sd( 7, 3, 2)".parse::<GroupSpec>().unwrap(),
            GroupSpec::Semidirect { n: 7, m: 3, t: 2 }
        );
        assert!("Q8".parse::<GroupSpec>().is_err());
        assert!("SD(7,3)".parse::<GroupSpec>().is_err());
        assert_eq!(GroupSpec::Abelian(vec![3, 5]).to_string(), "Z3xZ5");
    }

    #[test]
    fn parse_elements() {
        let z9 = FiniteGroup::abelian(&[9]).unwrap();
        assert_eq!(z9.parse_element("-1").unwrap(), 8);
        assert_eq!(z9.parse_element("11").unwrap(), 2);
        let z33 = FiniteGroup::abelian(&[3, 3]).unwrap();
        assert_eq!(
            z33.parse_element("-(1,2)").unwrap(),
            z33.from_vector(&[2, 1]).unwrap()
        );
        assert!(z33.parse_element("1").is_err());
        let sd = FiniteGroup::semidirect(7, 3, 2).unwrap();
        let a = sd.parse_element("a").unwrap();
        let x = sd.parse_element("x").unwrap();
        let ax = sd.op(a, x);
        assert_eq!(sd.parse_element("ax").unwrap(), ax);
        assert_eq!(sd.parse_element("(ax)^-1").unwrap(), sd.inverse_of(ax));
        assert_eq!(sd.parse_element("a^-1").unwrap(), sd.inverse_of(a));
        assert_eq!(sd.parse_element("x^7").unwrap(), sd.identity());
        assert!(sd.parse_element("ab").is_err());
        assert!(sd.parse_element("(a").is_err());
    }
}
