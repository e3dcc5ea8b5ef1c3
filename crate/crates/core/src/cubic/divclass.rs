use std::fmt;

use serde::{Deserialize, Serialize};

/// A divisor class `c₀ℓ + c₁e₁ + ... + c₆e₆` on a smooth cubic surface,
/// viewed as the blow-up of the plane in six points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DivClass(pub [i64; 7]);

/// Anticanonical (hyperplane) class `3ℓ - Σ eᵢ`.
pub const HYPERPLANE: DivClass = DivClass([3, -1, -1, -1, -1, -1, -1]);

/// Pullback of a general line.
pub const LINE_CLASS: DivClass = DivClass([1, 0, 0, 0, 0, 0, 0]);

impl DivClass {
    pub fn exceptional(i: usize) -> Self {
        assert!((1..=6).contains(&i));
        let mut c = [0; 7];
        c[i] = 1;
        DivClass(c)
    }

    /// Intersection pairing with form `diag(1, -1, ..., -1)`.
    pub fn dot(&self, other: &Self) -> i64 {
        self.0[0] * other.0[0] - (1..7).map(|i| self.0[i] * other.0[i]).sum::<i64>()
    }

    pub fn self_intersection(&self) -> i64 {
        self.dot(self)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut c = [0; 7];
        for (i, x) in c.iter_mut().enumerate() {
            *x = self.0[i] + other.0[i];
        }
        DivClass(c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut c = [0; 7];
        for (i, x) in c.iter_mut().enumerate() {
            *x = self.0[i] - other.0[i];
        }
        DivClass(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Whether this is one of the 27 lines: `D² = -1`, `D·H = 1`.
    pub fn is_line(&self) -> bool {
        self.self_intersection() == -1 && self.dot(&HYPERPLANE) == 1
    }
}

impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        let names = ["l", "e1", "e2", "e3", "e4", "e5", "e6"];
        for (c, name) in self.0.iter().zip(names) {
            let term = match c {
                0 => continue,
                1 => name.to_string(),
                -1 => format!("-{name}"),
                c => format!("{c}{name}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = terms[0].clone();
        for t in &terms[1..] {
            if let Some(rest) = t.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(t);
            }
        }
        write!(f, "{s}")
    }
}

/// The 27 lines: `eᵢ`, `ℓ - eᵢ - eⱼ` (i < j), `2ℓ - Σ_{i≠j} eᵢ`, in that order.
pub fn lines27() -> Vec<DivClass> {
    let mut out = Vec::with_capacity(27);
    for i in 1..=6 {
        out.push(DivClass::exceptional(i));
    }
    for i in 1..=6 {
        for j in i + 1..=6 {
            let mut c = [0; 7];
            c[0] = 1;
            c[i] = -1;
            c[j] = -1;
            out.push(DivClass(c));
        }
    }
    for j in 1..=6 {
        let mut c = [-1; 7];
        c[0] = 2;
        c[j] = 0;
        out.push(DivClass(c));
    }
    out
}

/// Three lines meeting pairwise once and summing to the hyperplane class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TritangentTrio {
    /// Indices into [`lines27`], increasing.
    pub indices: [usize; 3],
    pub classes: [DivClass; 3],
}

impl TritangentTrio {
    pub fn is_valid(classes: &[DivClass; 3]) -> bool {
        let [a, b, c] = classes;
        a.is_line()
            && b.is_line()
            && c.is_line()
            && a.dot(b) == 1
            && a.dot(c) == 1
            && b.dot(c) == 1
            && a.add(b).add(c) == HYPERPLANE
    }
}

/// All 45 tritangent trios, ordered lexicographically by line indices.
pub fn tritangent_trios() -> Vec<TritangentTrio> {
    let lines = lines27();
    let mut out = Vec::new();
    for i in 0..27 {
        for j in i + 1..27 {
            for k in j + 1..27 {
                let classes = [lines[i], lines[j], lines[k]];
                if TritangentTrio::is_valid(&classes) {
                    out.push(TritangentTrio { indices: [i, j, k], classes });
                }
            }
        }
    }
    out
}

/// Index of a class among [`lines27`].
pub fn line_index(d: &DivClass) -> Option<usize> {
    lines27().iter().position(|l| l == d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_families() {
        let lines = lines27();
        assert_eq!(lines.len(), 27);
        assert!(lines.iter().all(DivClass::is_line));
        assert!(lines.contains(&DivClass([0, 1, 0, 0, 0, 0, 0])));
        assert!(lines.contains(&DivClass([1, -1, -1, 0, 0, 0, 0])));
        assert!(!LINE_CLASS.is_line());
    }

    #[test]
    fn standard_trio() {
        let t = [
            DivClass([1, -1, -1, 0, 0, 0, 0]),
            DivClass([1, 0, 0, -1, -1, 0, 0]),
            DivClass([1, 0, 0, 0, 0, -1, -1]),
        ];
        assert!(TritangentTrio::is_valid(&t));
        let e = [DivClass::exceptional(1), DivClass::exceptional(2), DivClass::exceptional(3)];
        assert!(!TritangentTrio::is_valid(&e));
        assert_eq!(tritangent_trios().len(), 45);
    }

    #[test]
    fn display() {
        assert_eq!(DivClass([1, -1, -1, 0, 0, 0, 0]).to_string(), "l - e1 - e2");
        assert_eq!(HYPERPLANE.to_string(), "3l - e1 - e2 - e3 - e4 - e5 - e6");
        assert_eq!(serde_json::to_string(&DivClass::exceptional(2)).unwrap(), "[0,0,1,0,0,0,0]");
    }
}
