//! Finite group models given by multiplication tables, subgroup
//! embeddings with coset data, and the built-in corpus generators
//! (cyclic, dihedral, symmetric up to S₄).

use std::collections::BTreeSet;

use super::TfError;

/// A finite group as a multiplication table. Element 0 need not be the
/// identity; the identity index is located and stored on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupModel {
    order: usize,
    mul: Vec<u16>, // row-major: mul[a * order + b] = a·b
    inv: Vec<u16>,
    identity: usize,
}

impl FiniteGroupModel {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, TfError> {
        let order = table.len();
        if order == 0 || order > u16::MAX as usize {
            return Err(TfError::InvalidModel("empty or oversized table".into()));
        }
        for row in &table {
            if row.len() != order || row.iter().any(|&x| x >= order) {
                return Err(TfError::InvalidModel("table is not square over 0..order".into()));
            }
        }
        let mut mul = vec![0u16; order * order];
        for (a, row) in table.iter().enumerate() {
            for (b, &c) in row.iter().enumerate() {
                mul[a * order + b] = c as u16;
            }
        }
        // identity: the unique e with e·x = x·e = x
        let identity = (0..order)
            .find(|&e| {
                (0..order).all(|x| mul[e * order + x] == x as u16 && mul[x * order + e] == x as u16)
            })
            .ok_or_else(|| TfError::InvalidModel("no identity element".into()))?;
        let mut inv = vec![u16::MAX; order];
        for a in 0..order {
            let found = (0..order).find(|&b| {
                mul[a * order + b] == identity as u16 && mul[b * order + a] == identity as u16
            });
            match found {
                Some(b) => inv[a] = b as u16,
                None => {
                    return Err(TfError::InvalidModel(format!("element {a} has no inverse")));
                }
            }
        }
        let g = FiniteGroupModel { order, mul, inv, identity };
        g.check_associativity()?;
        Ok(g)
    }

    /// Full associativity check for orders ≤ 64, random triples above.
    fn check_associativity(&self) -> Result<(), TfError> {
        let n = self.order;
        let verify = |a: usize, b: usize, c: usize| -> bool {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !verify(a, b, c) {
                            return Err(TfError::InvalidModel(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
            for _ in 0..20_000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !verify(a, b, c) {
                    return Err(TfError::InvalidModel(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
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

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn conj(&self, x: usize, by: usize) -> usize {
        self.mul(self.mul(by, x), self.inv(by))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Closure of a generating set.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        set.insert(self.identity);
        let mut frontier: Vec<usize> = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                for y in [self.mul(x, g), self.mul(x, self.inv(g))] {
                    if set.insert(y) {
                        frontier.push(y);
                    }
                }
            }
        }
        set.into_iter().collect()
    }

    /// Every subgroup, as sorted element lists, built by closing each
    /// existing subgroup with one new generator until stable.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        all.insert(vec![self.identity]);
        let mut frontier: Vec<Vec<usize>> = vec![vec![self.identity]];
        while let Some(h) = frontier.pop() {
            for g in 0..self.order {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g);
                let closure = self.generated_subgroup(&gens);
                if all.insert(closure.clone()) {
                    frontier.push(closure);
                }
            }
        }
        all.into_iter().collect()
    }

    /// Centralizer of `x` within `domain` (or the whole group).
    pub fn centralizer(&self, domain: Option<&[usize]>, x: usize) -> Vec<usize> {
        let check = |g: usize| self.mul(g, x) == self.mul(x, g);
        match domain {
            Some(d) => d.iter().copied().filter(|&g| check(g)).collect(),
            None => (0..self.order).filter(|&g| check(g)).collect(),
        }
    }

    // ---- corpus builders ----

    pub fn cyclic(n: usize) -> FiniteGroupModel {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroupModel::from_table(table).expect("cyclic table is a group")
    }

    /// Dihedral group of order 2n: elements 0..n are rotations r^k,
    /// n..2n are reflections s·r^k.
    pub fn dihedral(n: usize) -> FiniteGroupModel {
        assert!(n >= 1);
        let idx = |flip: bool, k: usize| if flip { n + k } else { k };
        let table: Vec<Vec<usize>> = (0..2 * n)
            .map(|a| {
                let (fa, ka) = (a >= n, a % n);
                (0..2 * n)
                    .map(|b| {
                        let (fb, kb) = (b >= n, b % n);
                        // (s^fa r^ka)(s^fb r^kb) = s^{fa+fb} r^{±ka+kb}
                        let k = if fb { (n + kb - ka % n) % n } else { (ka + kb) % n };
                        idx(fa ^ fb, k)
                    })
                    .collect()
            })
            .collect();
        FiniteGroupModel::from_table(table).expect("dihedral table is a group")
    }

    /// Symmetric group S_n for n ≤ 4, elements in lexicographic
    /// permutation order.
    pub fn symmetric(n: usize) -> FiniteGroupModel {
        assert!((1..=4).contains(&n), "symmetric model built for n <= 4");
        let perms = permutations(n);
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).expect("perm exists");
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        // (a∘b)(i) = a(b(i))
                        let c: Vec<usize> = (0..n).map(|i| a[b[i]]).collect();
                        index_of(&c)
                    })
                    .collect()
            })
            .collect();
        FiniteGroupModel::from_table(table).expect("symmetric table is a group")
    }

    /// Looks up the index of a permutation of 0..n in the S_n model.
    pub fn symmetric_index(n: usize, perm: &[usize]) -> Option<usize> {
        permutations(n).iter().position(|q| q == perm)
    }
}

pub(super) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in out {
            for v in 0..n {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// A subgroup Γ ≤ G with the coset decomposition Γ\G.
#[derive(Debug, Clone)]
pub struct SubgroupEmbedding {
    pub elements: Vec<usize>,
    pub coset_reps: Vec<usize>,
}

impl SubgroupEmbedding {
    pub fn new(g: &FiniteGroupModel, mut elements: Vec<usize>) -> Result<Self, TfError> {
        elements.sort_unstable();
        elements.dedup();
        if elements.binary_search(&g.identity()).is_err() {
            return Err(TfError::InvalidModel("subgroup must contain the identity".into()));
        }
        for &a in &elements {
            if elements.binary_search(&g.inv(a)).is_err() {
                return Err(TfError::InvalidModel(format!("subgroup not closed under inverse at {a}")));
            }
            for &b in &elements {
                if elements.binary_search(&g.mul(a, b)).is_err() {
                    return Err(TfError::InvalidModel(format!(
                        "subgroup not closed under multiplication at ({a},{b})"
                    )));
                }
            }
        }
        // right cosets Γx, represented by their minimal element
        let mut seen = vec![false; g.order()];
        let mut coset_reps = Vec::new();
        for x in 0..g.order() {
            if seen[x] {
                continue;
            }
            coset_reps.push(x);
            for &h in &elements {
                seen[g.mul(h, x)] = true;
            }
        }
        if elements.len() * coset_reps.len() != g.order() {
            return Err(TfError::InvalidModel("coset decomposition does not tile the group".into()));
        }
        Ok(SubgroupEmbedding { elements, coset_reps })
    }

    /// Γ-conjugacy classes of Γ, as representative indices into G.
    pub fn conjugacy_classes(&self, g: &FiniteGroupModel) -> Vec<Vec<usize>> {
        let mut remaining: BTreeSet<usize> = self.elements.iter().copied().collect();
        let mut classes = Vec::new();
        while let Some(&x) = remaining.iter().next() {
            let mut class = BTreeSet::new();
            for &h in &self.elements {
                class.insert(g.conj(x, h));
            }
            for y in &class {
                remaining.remove(y);
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// The subgroup as a standalone group model plus the index map back
    /// into G.
    pub fn as_model(&self, g: &FiniteGroupModel) -> (FiniteGroupModel, Vec<usize>) {
        let local =
            |x: usize| self.elements.binary_search(&x).expect("element belongs to subgroup");
        let table: Vec<Vec<usize>> = self
            .elements
            .iter()
            .map(|&a| self.elements.iter().map(|&b| local(g.mul(a, b))).collect())
            .collect();
        (
            FiniteGroupModel::from_table(table).expect("subgroup table is a group"),
            self.elements.clone(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_dihedral_orders() {
        assert_eq!(FiniteGroupModel::cyclic(7).order(), 7);
        let d4 = FiniteGroupModel::dihedral(4);
        assert_eq!(d4.order(), 8);
        // r has order 4, every reflection has order 2
        assert_eq!(d4.element_order(1), 4);
        for k in 4..8 {
            assert_eq!(d4.element_order(k), 2);
        }
    }

    #[test]
    fn symmetric_group_sizes() {
        assert_eq!(FiniteGroupModel::symmetric(3).order(), 6);
        assert_eq!(FiniteGroupModel::symmetric(4).order(), 24);
    }

    #[test]
    fn subgroup_count_of_s4_is_thirty() {
        let s4 = FiniteGroupModel::symmetric(4);
        assert_eq!(s4.subgroups().len(), 30);
    }

    #[test]
    fn subgroup_count_of_d4_is_ten() {
        assert_eq!(FiniteGroupModel::dihedral(4).subgroups().len(), 10);
    }

    #[test]
    fn embedding_validates_and_tiles() {
        let s3 = FiniteGroupModel::symmetric(3);
        // ⟨(12)⟩: identity [0,1,2] and transposition [1,0,2]
        let t = FiniteGroupModel::symmetric_index(3, &[1, 0, 2]).unwrap();
        let sub = SubgroupEmbedding::new(&s3, s3.generated_subgroup(&[t])).unwrap();
        assert_eq!(sub.elements.len(), 2);
        assert_eq!(sub.coset_reps.len(), 3);
        assert!(SubgroupEmbedding::new(&s3, vec![s3.identity(), t, 5]).is_err());
    }

    #[test]
    fn conjugacy_classes_of_abelian_subgroup_are_singletons() {
        let c6 = FiniteGroupModel::cyclic(6);
        let sub = SubgroupEmbedding::new(&c6, (0..6).collect()).unwrap();
        let classes = sub.conjugacy_classes(&c6);
        assert_eq!(classes.len(), 6);
        assert!(classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn bad_tables_rejected() {
        // a "table" with no identity
        let t = vec![vec![1, 0], vec![1, 0]];
        assert!(FiniteGroupModel::from_table(t).is_err());
    }

    #[test]
    fn submodel_is_isomorphic_copy() {
        let d6 = FiniteGroupModel::dihedral(6);
        let rot = d6.generated_subgroup(&[1]);
        let sub = SubgroupEmbedding::new(&d6, rot).unwrap();
        let (model, map) = sub.as_model(&d6);
        assert_eq!(model.order(), 6);
        for a in 0..model.order() {
            for b in 0..model.order() {
                assert_eq!(map[model.mul(a, b)], d6.mul(map[a], map[b]));
            }
        }
    }
}
