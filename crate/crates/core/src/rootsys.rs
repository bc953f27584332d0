//! Root systems of the finite reflection types, built uniformly from
//! Coxeter matrices. Roots are stored as unit normals in double precision;
//! only snapped rational angle data enters the exact arithmetic downstream.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(usize),
}

impl std::str::FromStr for CoxeterType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unsupported = || Error::UnsupportedType(s.to_string());
        if let Some(rest) = s.strip_prefix("I2(") {
            let m: usize = rest
                .strip_suffix(')')
                .ok_or_else(unsupported)?
                .parse()
                .map_err(|_| unsupported())?;
            if m < 3 {
                return Err(unsupported());
            }
            return Ok(CoxeterType::I2(m));
        }
        let (letter, rank) = s.split_at(1);
        let rank: usize = rank.parse().map_err(|_| unsupported())?;
        match (letter, rank) {
            ("A" | "a", r) if r >= 1 => Ok(CoxeterType::A(r)),
            ("B" | "b", r) if r >= 2 => Ok(CoxeterType::B(r)),
            ("D" | "d", r) if r >= 4 => Ok(CoxeterType::D(r)),
            ("E" | "e", 6) => Ok(CoxeterType::E6),
            ("E" | "e", 7) => Ok(CoxeterType::E7),
            ("E" | "e", 8) => Ok(CoxeterType::E8),
            ("F" | "f", 4) => Ok(CoxeterType::F4),
            ("H" | "h", 3) => Ok(CoxeterType::H3),
            ("H" | "h", 4) => Ok(CoxeterType::H4),
            _ => Err(unsupported()),
        }
    }
}

impl std::fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoxeterType::A(r) => write!(f, "A{r}"),
            CoxeterType::B(r) => write!(f, "B{r}"),
            CoxeterType::D(r) => write!(f, "D{r}"),
            CoxeterType::E6 => write!(f, "E6"),
            CoxeterType::E7 => write!(f, "E7"),
            CoxeterType::E8 => write!(f, "E8"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::H3 => write!(f, "H3"),
            CoxeterType::H4 => write!(f, "H4"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl CoxeterType {
    pub fn rank(&self) -> usize {
        match self {
            CoxeterType::A(r) | CoxeterType::B(r) | CoxeterType::D(r) => *r,
            CoxeterType::E6 => 6,
            CoxeterType::E7 => 7,
            CoxeterType::E8 => 8,
            CoxeterType::F4 => 4,
            CoxeterType::H3 => 3,
            CoxeterType::H4 => 4,
            CoxeterType::I2(_) => 2,
        }
    }

    /// Coxeter matrix entries `m(i,j)` for `i != j` (1 on the diagonal).
    pub fn coxeter_matrix(&self) -> Vec<Vec<usize>> {
        fn edge(m: &mut [Vec<usize>], a: usize, b: usize, label: usize) {
            m[a][b] = label;
            m[b][a] = label;
        }
        let r = self.rank();
        let mut m = vec![vec![2; r]; r];
        for i in 0..r {
            m[i][i] = 1;
        }
        match self {
            CoxeterType::A(_) => {
                for i in 0..r.saturating_sub(1) {
                    edge(&mut m, i, i + 1, 3);
                }
            }
            CoxeterType::B(_) => {
                for i in 0..r - 2 {
                    edge(&mut m, i, i + 1, 3);
                }
                edge(&mut m, r - 2, r - 1, 4);
            }
            CoxeterType::D(_) => {
                for i in 0..r - 2 {
                    edge(&mut m, i, i + 1, 3);
                }
                edge(&mut m, r - 3, r - 1, 3);
            }
            CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8 => {
                // a path on 0..r-2 with the branch node hanging off index 2
                for i in 0..r - 2 {
                    edge(&mut m, i, i + 1, 3);
                }
                edge(&mut m, 2, r - 1, 3);
            }
            CoxeterType::F4 => {
                edge(&mut m, 0, 1, 3);
                edge(&mut m, 1, 2, 4);
                edge(&mut m, 2, 3, 3);
            }
            CoxeterType::H3 => {
                edge(&mut m, 0, 1, 5);
                edge(&mut m, 1, 2, 3);
            }
            CoxeterType::H4 => {
                edge(&mut m, 0, 1, 5);
                edge(&mut m, 1, 2, 3);
                edge(&mut m, 2, 3, 3);
            }
            CoxeterType::I2(mm) => {
                edge(&mut m, 0, 1, *mm);
            }
        }
        m
    }

    pub fn group_order(&self) -> u64 {
        match self {
            CoxeterType::A(r) => crate::partition::factorial(*r as u64 + 1),
            CoxeterType::B(r) => (1u64 << r) * crate::partition::factorial(*r as u64),
            CoxeterType::D(r) => (1u64 << (r - 1)) * crate::partition::factorial(*r as u64),
            CoxeterType::E6 => 51840,
            CoxeterType::E7 => 2903040,
            CoxeterType::E8 => 696729600,
            CoxeterType::F4 => 1152,
            CoxeterType::H3 => 120,
            CoxeterType::H4 => 14400,
            CoxeterType::I2(m) => 2 * *m as u64,
        }
    }

    pub fn positive_root_count(&self) -> usize {
        match self {
            CoxeterType::A(r) => r * (r + 1) / 2,
            CoxeterType::B(r) => r * r,
            CoxeterType::D(r) => r * (r - 1),
            CoxeterType::E6 => 36,
            CoxeterType::E7 => 63,
            CoxeterType::E8 => 120,
            CoxeterType::F4 => 24,
            CoxeterType::H3 => 15,
            CoxeterType::H4 => 60,
            CoxeterType::I2(m) => *m,
        }
    }

    pub fn coxeter_number(&self) -> usize {
        2 * self.positive_root_count() / self.rank()
    }

    pub fn is_crystallographic(&self) -> bool {
        matches!(
            self,
            CoxeterType::A(_)
                | CoxeterType::B(_)
                | CoxeterType::D(_)
                | CoxeterType::E6
                | CoxeterType::E7
                | CoxeterType::E8
                | CoxeterType::F4
        ) || matches!(self, CoxeterType::I2(m) if [3, 4, 6].contains(m))
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(
            self,
            CoxeterType::A(_)
                | CoxeterType::D(_)
                | CoxeterType::E6
                | CoxeterType::E7
                | CoxeterType::E8
        )
    }
}

pub struct RootSystem {
    pub ctype: CoxeterType,
    pub rank: usize,
    /// Unit simple-root normals.
    pub simple: Vec<Vec<f64>>,
    /// Unit positive-root normals; the first `rank` entries are the simples.
    pub positive: Vec<Vec<f64>>,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn reflect(v: &[f64], alpha: &[f64]) -> Vec<f64> {
    let c = 2.0 * dot(v, alpha);
    v.iter().zip(alpha).map(|(x, a)| x - c * a).collect()
}

const TOL: f64 = 1e-9;

fn same_vector(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-7)
}

impl RootSystem {
    pub fn build(ctype: CoxeterType) -> Result<Self> {
        let rank = ctype.rank();
        let m = ctype.coxeter_matrix();
        // triangular construction: unit vectors with the prescribed pairwise
        // angles -cos(pi/m_ij)
        let mut simple: Vec<Vec<f64>> = Vec::with_capacity(rank);
        for i in 0..rank {
            let mut v = vec![0.0; rank];
            for j in 0..i {
                let target = -(std::f64::consts::PI / m[i][j] as f64).cos();
                let partial = dot(&v[..j], &simple[j][..j]);
                v[j] = (target - partial) / simple[j][j];
            }
            let norm2: f64 = dot(&v[..i], &v[..i]);
            if norm2 >= 1.0 - TOL {
                return Err(Error::UnsupportedType(format!(
                    "degenerate Coxeter data for {ctype}"
                )));
            }
            v[i] = (1.0 - norm2).sqrt();
            simple.push(v);
        }
        // generic chamber functional: g = Σ w_i α_i with <g, α_j> = 1
        let weights = solve_gram(&simple)?;
        let g: Vec<f64> = (0..rank)
            .map(|k| {
                simple
                    .iter()
                    .zip(&weights)
                    .map(|(a, w)| w * a[k])
                    .sum::<f64>()
            })
            .collect();
        // closure under simple reflections
        let mut roots: Vec<Vec<f64>> = simple.clone();
        let mut queue: Vec<Vec<f64>> = simple.clone();
        while let Some(v) = queue.pop() {
            for a in &simple {
                let r = reflect(&v, a);
                let pos = if dot(&r, &g) > 0.0 {
                    r
                } else {
                    r.iter().map(|x| -x).collect()
                };
                if !roots.iter().any(|known| same_vector(known, &pos)) {
                    roots.push(pos.clone());
                    queue.push(pos);
                }
            }
        }
        if roots.len() != ctype.positive_root_count() {
            return Err(Error::UnsupportedType(format!(
                "closure produced {} positive roots for {ctype}, expected {}",
                roots.len(),
                ctype.positive_root_count()
            )));
        }
        Ok(RootSystem {
            ctype,
            rank,
            simple,
            positive: roots,
        })
    }

    /// Orbits of root lines under the group, as sorted index sets into
    /// `positive`, ordered so that the orbit containing the first simple
    /// root comes first.
    pub fn hyperplane_orbits(&self) -> Vec<Vec<usize>> {
        let n = self.positive.len();
        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut members = vec![start];
            orbit_of[start] = id;
            let mut queue = vec![start];
            while let Some(i) = queue.pop() {
                for a in &self.simple {
                    let r = reflect(&self.positive[i], a);
                    let j = self
                        .find_line(&r)
                        .expect("reflection of a root is a root line");
                    if orbit_of[j] == usize::MAX {
                        orbit_of[j] = id;
                        members.push(j);
                        queue.push(j);
                    }
                }
            }
            members.sort_unstable();
            orbits.push(members);
        }
        orbits
    }

    /// Index of the positive root on the line of `v`.
    pub fn find_line(&self, v: &[f64]) -> Option<usize> {
        let neg: Vec<f64> = v.iter().map(|x| -x).collect();
        self.positive
            .iter()
            .position(|r| same_vector(r, v) || same_vector(r, &neg))
    }
}

fn solve_gram(simple: &[Vec<f64>]) -> Result<Vec<f64>> {
    let r = simple.len();
    let mut a: Vec<Vec<f64>> = (0..r)
        .map(|i| {
            let mut row: Vec<f64> = (0..r).map(|j| dot(&simple[i], &simple[j])).collect();
            row.push(1.0);
            row
        })
        .collect();
    // Gaussian elimination with partial pivoting
    for col in 0..r {
        let (pivot, _) = a
            .iter()
            .enumerate()
            .skip(col)
            .map(|(i, row)| (i, row[col].abs()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .unwrap();
        a.swap(col, pivot);
        if a[col][col].abs() < TOL {
            return Err(Error::UnsupportedType("singular Gram matrix".into()));
        }
        for i in 0..r {
            if i != col {
                let f = a[i][col] / a[col][col];
                for k in col..=r {
                    a[i][k] -= f * a[col][k];
                }
            }
        }
    }
    Ok((0..r).map(|i| a[i][r] / a[i][i]).collect())
}

/// Selects a hyperplane orbit: by convention `short` is the orbit containing
/// the last simple root and `long` the one containing the first (they agree
/// for single-orbit types), `all` unions everything.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitSelector {
    Short,
    Long,
    All,
}

impl std::str::FromStr for OrbitSelector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "short" => Ok(OrbitSelector::Short),
            "long" => Ok(OrbitSelector::Long),
            "all" => Ok(OrbitSelector::All),
            other => Err(Error::UnsupportedType(format!("orbit {other}"))),
        }
    }
}

pub fn select_orbit(rs: &RootSystem, selector: OrbitSelector) -> Vec<usize> {
    let orbits = rs.hyperplane_orbits();
    match selector {
        OrbitSelector::All => {
            let mut all: Vec<usize> = (0..rs.positive.len()).collect();
            all.sort_unstable();
            all
        }
        OrbitSelector::Long => orbits
            .iter()
            .find(|o| o.contains(&0))
            .expect("first simple root lives in an orbit")
            .clone(),
        OrbitSelector::Short => orbits
            .iter()
            .find(|o| o.contains(&(rs.rank - 1)))
            .expect("last simple root lives in an orbit")
            .clone(),
    }
}
