//! Finite corelations: partitions of the disjoint union of an input set and
//! an output set.
//!
//! Boundary elements share one flat index space. Inputs occupy
//! `0..dom` and outputs occupy `dom..dom + cod`. Every value is kept in
//! canonical form (members of each block ascending, blocks ordered by their
//! least element), so structural equality is equality of corelations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::union_find::UnionFind;

/// A morphism `dom -> cod` of the category of finite sets and corelations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawCorelation")]
pub struct Corelation {
    dom: usize,
    cod: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawCorelation {
    dom: usize,
    cod: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawCorelation> for Corelation {
    type Error = Error;

    fn try_from(raw: RawCorelation) -> Result<Self> {
        Corelation::new(raw.dom, raw.cod, raw.blocks)
    }
}

/// Generators on a single wire, plus the cup and cap of the self-duality of `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WireGenerator {
    /// `m : 2 -> 1`
    Mul,
    /// `i : 0 -> 1`
    Unit,
    /// `d : 1 -> 2`
    Comul,
    /// `e : 1 -> 0`
    Counit,
    /// `2 -> 0`, one block
    Cup,
    /// `0 -> 2`, one block
    Cap,
}

impl WireGenerator {
    pub const ALL: [WireGenerator; 6] = [
        Self::Mul,
        Self::Unit,
        Self::Comul,
        Self::Counit,
        Self::Cup,
        Self::Cap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Mul => "m",
            Self::Unit => "i",
            Self::Comul => "d",
            Self::Counit => "e",
            Self::Cup => "cup",
            Self::Cap => "cap",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|g| g.name() == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }
}

/// The eight generators living on the object `2`: the series structure
/// `(m2, i2, d2, e2)` and the parallel structure `(mu2, iota2, delta2, eps2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PortGenerator {
    M2,
    I2,
    D2,
    E2,
    Mu2,
    Iota2,
    Delta2,
    Eps2,
}

impl PortGenerator {
    pub const ALL: [PortGenerator; 8] = [
        Self::M2,
        Self::I2,
        Self::D2,
        Self::E2,
        Self::Mu2,
        Self::Iota2,
        Self::Delta2,
        Self::Eps2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::M2 => "m2",
            Self::I2 => "i2",
            Self::D2 => "d2",
            Self::E2 => "e2",
            Self::Mu2 => "mu2",
            Self::Iota2 => "iota2",
            Self::Delta2 => "delta2",
            Self::Eps2 => "eps2",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|g| g.name() == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Arity counted in ports (pairs of wires).
    pub fn port_arity(self) -> (usize, usize) {
        match self {
            Self::M2 | Self::Mu2 => (2, 1),
            Self::I2 | Self::Iota2 => (0, 1),
            Self::D2 | Self::Delta2 => (1, 2),
            Self::E2 | Self::Eps2 => (1, 0),
        }
    }
}

impl Corelation {
    /// Builds a corelation from a list of blocks, validating that they
    /// partition `0..dom + cod`.
    pub fn new(dom: usize, cod: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let size = dom + cod;
        let mut seen = vec![false; size];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::EmptyBlock);
            }
            for &index in block {
                if index >= size {
                    return Err(Error::IndexOutOfRange { index, size });
                }
                if seen[index] {
                    return Err(Error::OverlappingIndex { index });
                }
                seen[index] = true;
            }
        }
        if let Some(index) = seen.iter().position(|s| !s) {
            return Err(Error::MissingIndex { index });
        }
        Ok(Self::canonical(dom, cod, blocks))
    }

    fn canonical(dom: usize, cod: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Self { dom, cod, blocks }
    }

    /// Reads the classes of a union-find over the boundary as blocks.
    fn from_labels(dom: usize, cod: usize, count: usize, labels: &[usize]) -> Self {
        let mut blocks = vec![Vec::new(); count];
        for (index, &label) in labels.iter().enumerate() {
            blocks[label].push(index);
        }
        // labels are assigned in order of first occurrence, so blocks are
        // already sorted by least element with ascending members
        Self { dom, cod, blocks }
    }

    pub fn identity(n: usize) -> Self {
        let blocks = (0..n).map(|i| vec![i, n + i]).collect();
        Self { dom: n, cod: n, blocks }
    }

    /// The symmetry `a + b -> b + a`.
    pub fn braiding(a: usize, b: usize) -> Self {
        let n = a + b;
        let mut blocks: Vec<Vec<usize>> = (0..a).map(|i| vec![i, n + b + i]).collect();
        blocks.extend((0..b).map(|j| vec![a + j, n + j]));
        Self::canonical(n, n, blocks)
    }

    pub fn generator(g: WireGenerator) -> Self {
        let (dom, cod, blocks) = match g {
            WireGenerator::Mul => (2, 1, vec![vec![0, 1, 2]]),
            WireGenerator::Unit => (0, 1, vec![vec![0]]),
            WireGenerator::Comul => (1, 2, vec![vec![0, 1, 2]]),
            WireGenerator::Counit => (1, 0, vec![vec![0]]),
            WireGenerator::Cup => (2, 0, vec![vec![0, 1]]),
            WireGenerator::Cap => (0, 2, vec![vec![0, 1]]),
        };
        Self { dom, cod, blocks }
    }

    /// The port-level generators, built from their defining composites of
    /// wire generators.
    pub fn port_generator(g: PortGenerator) -> Self {
        use WireGenerator::*;
        let id1 = Self::identity(1);
        let m = Self::generator(Mul);
        let i = Self::generator(Unit);
        let d = Self::generator(Comul);
        let e = Self::generator(Counit);
        let swap_middle = id1.tensor(&Self::braiding(1, 1)).tensor(&id1);
        match g {
            // id1 + (e . m) + id1
            PortGenerator::M2 => id1.tensor(&e.after(&m).unwrap()).tensor(&id1),
            // d . i
            PortGenerator::I2 => d.after(&i).unwrap(),
            // id1 + (d . i) + id1
            PortGenerator::D2 => id1.tensor(&d.after(&i).unwrap()).tensor(&id1),
            // e . m
            PortGenerator::E2 => e.after(&m).unwrap(),
            // (m + m) . (id1 + sigma + id1)
            PortGenerator::Mu2 => m.tensor(&m).after(&swap_middle).unwrap(),
            PortGenerator::Iota2 => i.tensor(&i),
            // (id1 + sigma + id1) . (d + d)
            PortGenerator::Delta2 => swap_middle.after(&d.tensor(&d)).unwrap(),
            PortGenerator::Eps2 => e.tensor(&e),
        }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `self . first`: apply `first`, then `self`.
    ///
    /// The two partitions are glued along the shared middle boundary with a
    /// union-find over `A + B + C`. Classes that only contain middle elements
    /// are dropped, which is what keeps the result jointly epic.
    pub fn after(&self, first: &Corelation) -> Result<Corelation> {
        if first.cod != self.dom {
            return Err(Error::ArityMismatch {
                cod: first.cod,
                dom: self.dom,
            });
        }
        let (a, b, c) = (first.dom, first.cod, self.cod);
        let mut uf = UnionFind::new(a + b + c);
        for block in &first.blocks {
            uf.union_all(block);
        }
        for block in &self.blocks {
            let shifted: Vec<usize> = block.iter().map(|&x| x + a).collect();
            uf.union_all(&shifted);
        }
        // middle-only classes never receive a label
        let mut label_of_root = vec![usize::MAX; a + b + c];
        let mut labels = Vec::with_capacity(a + c);
        let mut count = 0;
        for x in (0..a).chain(a + b..a + b + c) {
            let root = uf.find(x);
            if label_of_root[root] == usize::MAX {
                label_of_root[root] = count;
                count += 1;
            }
            labels.push(label_of_root[root]);
        }
        Ok(Self::from_labels(a, c, count, &labels))
    }

    /// Classical-order composition: `compose(g, f)` is `f` then `g`.
    pub fn compose(g: &Corelation, f: &Corelation) -> Result<Corelation> {
        g.after(f)
    }

    /// Then `next`, in diagrammatic order.
    pub fn then(&self, next: &Corelation) -> Result<Corelation> {
        next.after(self)
    }

    /// Disjoint union, `self` on top.
    pub fn tensor(&self, other: &Corelation) -> Corelation {
        let (m, n) = (self.dom, self.cod);
        let (p, q) = (other.dom, other.cod);
        let top = |x: usize| if x < m { x } else { m + p + (x - m) };
        let bottom = |x: usize| if x < p { m + x } else { m + p + n + (x - p) };
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|blk| blk.iter().map(|&x| top(x)).collect())
            .collect();
        blocks.extend(
            other
                .blocks
                .iter()
                .map(|blk| blk.iter().map(|&x| bottom(x)).collect()),
        );
        Self::canonical(m + p, n + q, blocks)
    }

    /// The same partition read backwards.
    pub fn dagger(&self) -> Corelation {
        let (dom, cod) = (self.dom, self.cod);
        let flip = |x: usize| if x < dom { cod + x } else { x - dom };
        let blocks = self
            .blocks
            .iter()
            .map(|blk| blk.iter().map(|&x| flip(x)).collect())
            .collect();
        Self::canonical(cod, dom, blocks)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dom)
    }

    /// Iterated self-composition; `self` must be an endomorphism.
    pub fn power(&self, k: usize) -> Result<Corelation> {
        let mut acc = Self::identity(self.dom);
        for _ in 0..k {
            acc = self.after(&acc)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Corelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} {{", self.dom, self.cod)?;
        for (k, block) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{")?;
            for (j, x) in block.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(g: WireGenerator) -> Corelation {
        Corelation::generator(g)
    }

    fn port(g: PortGenerator) -> Corelation {
        Corelation::port_generator(g)
    }

    fn blocks(c: &Corelation) -> Vec<Vec<usize>> {
        c.blocks().to_vec()
    }

    #[test]
    fn make_validates_partitions() {
        let m = Corelation::new(2, 1, vec![vec![2, 0, 1]]).unwrap();
        assert_eq!(m, gen(WireGenerator::Mul));
        assert_eq!(Corelation::new(0, 0, vec![]).unwrap(), Corelation::identity(0));
        let two = Corelation::new(1, 1, vec![vec![1], vec![0]]).unwrap();
        assert_eq!(blocks(&two), vec![vec![0], vec![1]]);

        assert_eq!(
            Corelation::new(1, 1, vec![vec![0, 1], vec![1]]),
            Err(Error::OverlappingIndex { index: 1 })
        );
        assert_eq!(
            Corelation::new(1, 1, vec![vec![0]]),
            Err(Error::MissingIndex { index: 1 })
        );
        assert_eq!(
            Corelation::new(1, 1, vec![vec![0, 1, 2]]),
            Err(Error::IndexOutOfRange { index: 2, size: 2 })
        );
        assert_eq!(
            Corelation::new(1, 1, vec![vec![0, 1], vec![]]),
            Err(Error::EmptyBlock)
        );
    }

    #[test]
    fn identities_and_braidings() {
        assert!(Corelation::identity(0).blocks().is_empty());
        assert_eq!(blocks(&Corelation::identity(1)), vec![vec![0, 1]]);
        assert_eq!(blocks(&Corelation::braiding(1, 1)), vec![vec![0, 3], vec![1, 2]]);
        assert_eq!(Corelation::braiding(3, 0), Corelation::identity(3));
        assert_eq!(Corelation::braiding(0, 2), Corelation::identity(2));
        let round = Corelation::braiding(2, 1).then(&Corelation::braiding(1, 2)).unwrap();
        assert!(round.is_identity());
        assert_ne!(Corelation::identity(2), Corelation::braiding(1, 1));
    }

    #[test]
    fn special_and_extra() {
        use WireGenerator::*;
        assert!(gen(Mul).after(&gen(Comul)).unwrap().is_identity());
        assert_eq!(gen(Counit).after(&gen(Unit)).unwrap(), Corelation::identity(0));
    }

    #[test]
    fn arity_mismatch_is_reported() {
        let err = gen(WireGenerator::Mul).after(&gen(WireGenerator::Mul)).unwrap_err();
        assert_eq!(err, Error::ArityMismatch { cod: 1, dom: 2 });
    }

    #[test]
    fn zig_zag() {
        let id1 = Corelation::identity(1);
        let snake = id1
            .tensor(&gen(WireGenerator::Cup))
            .after(&gen(WireGenerator::Cap).tensor(&id1))
            .unwrap();
        assert!(snake.is_identity());
        let other = gen(WireGenerator::Cup)
            .tensor(&id1)
            .after(&id1.tensor(&gen(WireGenerator::Cap)))
            .unwrap();
        assert!(other.is_identity());
    }

    #[test]
    fn tensors_of_units() {
        use WireGenerator::*;
        assert_eq!(gen(Unit).tensor(&gen(Unit)), port(PortGenerator::Iota2));
        assert_eq!(gen(Counit).tensor(&gen(Counit)), port(PortGenerator::Eps2));
        let id1 = Corelation::identity(1);
        assert_eq!(id1.tensor(&id1), Corelation::identity(2));
    }

    #[test]
    fn dagger_examples() {
        use WireGenerator::*;
        assert_eq!(gen(Mul).dagger(), gen(Comul));
        assert_eq!(gen(Cup).dagger(), gen(Cap));
        assert_eq!(port(PortGenerator::I2).dagger(), port(PortGenerator::E2));
        assert_eq!(port(PortGenerator::M2).dagger(), port(PortGenerator::D2));
        assert_eq!(port(PortGenerator::Mu2).dagger(), port(PortGenerator::Delta2));
        assert_eq!(port(PortGenerator::Iota2).dagger(), port(PortGenerator::Eps2));
    }

    #[test]
    fn port_generator_blocks() {
        let expected: [(PortGenerator, usize, usize, Vec<Vec<usize>>); 8] = [
            (PortGenerator::M2, 4, 2, vec![vec![0, 4], vec![1, 2], vec![3, 5]]),
            (PortGenerator::I2, 0, 2, vec![vec![0, 1]]),
            (PortGenerator::D2, 2, 4, vec![vec![0, 2], vec![1, 5], vec![3, 4]]),
            (PortGenerator::E2, 2, 0, vec![vec![0, 1]]),
            (PortGenerator::Mu2, 4, 2, vec![vec![0, 2, 4], vec![1, 3, 5]]),
            (PortGenerator::Iota2, 0, 2, vec![vec![0], vec![1]]),
            (PortGenerator::Delta2, 2, 4, vec![vec![0, 2, 4], vec![1, 3, 5]]),
            (PortGenerator::Eps2, 2, 0, vec![vec![0], vec![1]]),
        ];
        for (g, dom, cod, bl) in expected {
            let c = port(g);
            assert_eq!((c.dom(), c.cod()), (dom, cod), "{}", g.name());
            assert_eq!(blocks(&c), bl, "{}", g.name());
            let (pd, pc) = g.port_arity();
            assert_eq!((2 * pd, 2 * pc), (dom, cod));
        }
    }

    #[test]
    fn port_level_special_and_strange_law() {
        use PortGenerator::*;
        assert!(port(M2).after(&port(D2)).unwrap().is_identity());
        let all_one = Corelation::new(2, 2, vec![vec![0, 1, 2, 3]]).unwrap();
        let dm = gen(WireGenerator::Comul).after(&gen(WireGenerator::Mul)).unwrap();
        assert_eq!(dm, all_one);
        assert_eq!(port(M2).after(&port(Delta2)).unwrap(), all_one);
        assert_eq!(port(Mu2).after(&port(D2)).unwrap(), all_one);
    }

    #[test]
    fn names_round_trip() {
        for g in WireGenerator::ALL {
            assert_eq!(WireGenerator::from_name(g.name()).unwrap(), g);
        }
        for g in PortGenerator::ALL {
            assert_eq!(PortGenerator::from_name(g.name()).unwrap(), g);
        }
        assert!(WireGenerator::from_name("x").is_err());
        assert!(PortGenerator::from_name("m").is_err());
    }

    #[test]
    fn json_encoding() {
        let m2 = port(PortGenerator::M2);
        let text = serde_json::to_string(&m2).unwrap();
        assert_eq!(text, r#"{"dom":4,"cod":2,"blocks":[[0,4],[1,2],[3,5]]}"#);
        let back: Corelation = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m2);
        let bad = serde_json::from_str::<Corelation>(r#"{"dom":1,"cod":1,"blocks":[[0]]}"#);
        assert!(bad.is_err());
        // non-canonical input is accepted and canonicalised
        let loose: Corelation =
            serde_json::from_str(r#"{"dom":4,"cod":2,"blocks":[[5,3],[2,1],[4,0]]}"#).unwrap();
        assert_eq!(loose, m2);
    }

    #[test]
    fn display() {
        assert_eq!(port(PortGenerator::M2).to_string(), "4 -> 2 {{0,4}, {1,2}, {3,5}}");
    }
}
