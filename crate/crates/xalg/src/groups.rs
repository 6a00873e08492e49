//! Catalog of the finite groups of order at most 12, as explicit
//! multiplication tables with distinguished generators. The numbering of
//! `(order, index)` ids follows the small-groups library so that census
//! rows can be addressed the usual way, e.g. `8,5` for C2 x C2 x C2.

use crate::{Error, Result};
use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
pub struct Group {
    pub n: usize,
    /// mul[a][b] = index of the product ab.
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub id_index: usize,
    pub generators: Vec<usize>,
    /// order of each element.
    pub elem_order: Vec<usize>,
    /// spanning tree of the Cayley graph: `tree[g] = (h, i)` with
    /// `g = h * generators[i]`, `None` at the identity. Used to propagate
    /// generator images deterministically.
    pub tree: Vec<Option<(usize, usize)>>,
    pub name: String,
    pub small_group_id: (u32, u32),
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, order {})", self.name, self.n)
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.mul == other.mul && self.generators == other.generators
    }
}
impl Eq for Group {}

impl Group {
    /// Builds a group from a multiplication table; verifies associativity,
    /// identity, inverses and that the generators reach every element.
    pub fn from_table(
        mul: Vec<Vec<usize>>,
        generators: Vec<usize>,
        name: &str,
        small_group_id: (u32, u32),
    ) -> Result<Arc<Group>> {
        let n = mul.len();
        assert!(n > 0 && mul.iter().all(|r| r.len() == n));
        // identity
        let id_index = (0..n)
            .find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| Error::AxiomFailed {
                axiom: "group identity",
                witness: name.to_string(),
            })?;
        // associativity, exhaustive (n <= 12)
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::AxiomFailed {
                            axiom: "group associativity",
                            witness: format!("({a},{b},{c}) in {name}"),
                        });
                    }
                }
            }
        }
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| mul[a][b] == id_index && mul[b][a] == id_index)
                .ok_or_else(|| Error::AxiomFailed {
                    axiom: "group inverses",
                    witness: format!("element {a} in {name}"),
                })?;
        }
        // element orders
        let mut elem_order = vec![0; n];
        for a in 0..n {
            let mut x = a;
            let mut o = 1;
            while x != id_index {
                x = mul[x][a];
                o += 1;
            }
            elem_order[a] = o;
        }
        // BFS spanning tree from the identity along the generators
        let mut tree = vec![None; n];
        let mut seen = vec![false; n];
        seen[id_index] = true;
        let mut queue = std::collections::VecDeque::from([id_index]);
        while let Some(g) = queue.pop_front() {
            for (i, &gen) in generators.iter().enumerate() {
                let h = mul[g][gen];
                if !seen[h] {
                    seen[h] = true;
                    tree[h] = Some((g, i));
                    queue.push_back(h);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::NotGenerating);
        }
        Ok(Arc::new(Group {
            n,
            mul,
            inv,
            id_index,
            generators,
            elem_order,
            tree,
            name: name.to_string(),
            small_group_id,
        }))
    }

    /// Elements of the group in BFS order from the identity; identity first.
    pub fn bfs_order(&self) -> Vec<usize> {
        let mut out = vec![self.id_index];
        let mut seen = vec![false; self.n];
        seen[self.id_index] = true;
        let mut i = 0;
        while i < out.len() {
            let g = out[i];
            for &gen in &self.generators {
                let h = self.mul[g][gen];
                if !seen[h] {
                    seen[h] = true;
                    out.push(h);
                }
            }
            i += 1;
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// Multiset of element orders, sorted. Distinguishes e.g. D8 from Q8.
    pub fn order_statistics(&self) -> Vec<usize> {
        let mut v = self.elem_order.clone();
        v.sort_unstable();
        v
    }
}

fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect()
}

fn cyclic(n: usize, id: (u32, u32), name: &str) -> Arc<Group> {
    let gens = if n == 1 { vec![] } else { vec![1] };
    Group::from_table(cyclic_table(n), gens, name, id).expect("cyclic group")
}

/// Dihedral group of order 2n: elements r^i s^e encoded as i + e*n,
/// with s r s = r^{-1}.
fn dihedral(two_n: usize, id: (u32, u32), name: &str) -> Arc<Group> {
    let n = two_n / 2;
    let idx = |i: usize, e: usize| (i % n) + e * n;
    let mut mul = vec![vec![0; two_n]; two_n];
    for i in 0..n {
        for e in 0..2 {
            for j in 0..n {
                for f in 0..2 {
                    // (r^i s^e)(r^j s^f) = r^{i + j*(-1)^e} s^{e+f}
                    let jj = if e == 0 { j } else { (n - j) % n };
                    mul[idx(i, e)][idx(j, f)] = idx((i + jj) % n, (e + f) % 2);
                }
            }
        }
    }
    Group::from_table(mul, vec![idx(1, 0), idx(0, 1)], name, id).expect("dihedral group")
}

/// Dicyclic group of order 4n: <a, b | a^{2n} = 1, b^2 = a^n, bab^-1 = a^-1>,
/// elements a^i b^e encoded as i + e*2n. n = 2 gives the quaternion group.
fn dicyclic(four_n: usize, id: (u32, u32), name: &str) -> Arc<Group> {
    let two_n = four_n / 2;
    let n = two_n / 2;
    let idx = |i: usize, e: usize| (i % two_n) + e * two_n;
    let mut mul = vec![vec![0; four_n]; four_n];
    for i in 0..two_n {
        for e in 0..2 {
            for j in 0..two_n {
                for f in 0..2 {
                    let jj = if e == 0 { j } else { (two_n - j) % two_n };
                    let mut exp = (i + jj) % two_n;
                    let mut flag = e + f;
                    if flag == 2 {
                        // b^2 = a^n
                        exp = (exp + n) % two_n;
                        flag = 0;
                    }
                    mul[idx(i, e)][idx(j, f)] = idx(exp, flag);
                }
            }
        }
    }
    Group::from_table(mul, vec![idx(1, 0), idx(0, 1)], name, id).expect("dicyclic group")
}

/// Direct product; generators are the images of each factor's generators.
fn direct(a: &Group, b: &Group, id: (u32, u32), name: &str) -> Arc<Group> {
    let n = a.n * b.n;
    let idx = |x: usize, y: usize| x * b.n + y;
    let mut mul = vec![vec![0; n]; n];
    for x1 in 0..a.n {
        for y1 in 0..b.n {
            for x2 in 0..a.n {
                for y2 in 0..b.n {
                    mul[idx(x1, y1)][idx(x2, y2)] = idx(a.mul[x1][x2], b.mul[y1][y2]);
                }
            }
        }
    }
    let mut gens: Vec<usize> = a.generators.iter().map(|&g| idx(g, b.id_index)).collect();
    gens.extend(b.generators.iter().map(|&g| idx(a.id_index, g)));
    Group::from_table(mul, gens, name, id).expect("direct product")
}

/// Closure of permutation generators (one-line notation on 0..degree);
/// elements ordered by BFS discovery from the identity.
fn from_perm_gens(degree: usize, gens: &[Vec<usize>], id: (u32, u32), name: &str) -> Arc<Group> {
    let identity: Vec<usize> = (0..degree).collect();
    let compose = |a: &[usize], b: &[usize]| -> Vec<usize> {
        // (a*b)(x) = a(b(x))
        (0..degree).map(|x| a[b[x]]).collect()
    };
    let mut elems = vec![identity.clone()];
    let mut index = std::collections::HashMap::new();
    index.insert(identity, 0usize);
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let h = compose(&elems[i], g);
            if !index.contains_key(&h) {
                index.insert(h.clone(), elems.len());
                elems.push(h);
            }
        }
        i += 1;
    }
    let n = elems.len();
    let mul = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| index[&compose(&elems[a], &elems[b])])
                .collect()
        })
        .collect();
    let gen_idx = gens.iter().map(|g| index[g]).collect();
    Group::from_table(mul, gen_idx, name, id).expect("permutation group")
}

/// The 23 catalog ids, in table order.
pub const CATALOG_IDS: [(u32, u32); 23] = [
    (1, 1),
    (2, 1),
    (3, 1),
    (4, 1),
    (4, 2),
    (5, 1),
    (6, 1),
    (6, 2),
    (7, 1),
    (8, 1),
    (8, 2),
    (8, 3),
    (8, 4),
    (8, 5),
    (9, 1),
    (9, 2),
    (10, 1),
    (10, 2),
    (11, 1),
    (12, 1),
    (12, 2),
    (12, 3),
    (12, 4),
];

/// Looks up a catalog group by small-group id.
pub fn catalog(id: (u32, u32)) -> Result<Arc<Group>> {
    let c2 = || cyclic(2, (2, 1), "C2");
    let c3 = || cyclic(3, (3, 1), "C3");
    let c4 = || cyclic(4, (4, 1), "C4");
    Ok(match id {
        (1, 1) => cyclic(1, id, "I"),
        (2, 1) => c2(),
        (3, 1) => c3(),
        (4, 1) => c4(),
        (4, 2) => direct(&c2(), &c2(), id, "C2xC2"),
        (5, 1) => cyclic(5, id, "C5"),
        (6, 1) => dihedral(6, id, "S3"),
        (6, 2) => cyclic(6, id, "C6"),
        (7, 1) => cyclic(7, id, "C7"),
        (8, 1) => cyclic(8, id, "C8"),
        (8, 2) => direct(&c4(), &c2(), id, "C4xC2"),
        (8, 3) => dihedral(8, id, "D8"),
        (8, 4) => dicyclic(8, id, "Q8"),
        (8, 5) => direct(
            &direct(&c2(), &c2(), (4, 2), "C2xC2"),
            &c2(),
            id,
            "C2xC2xC2",
        ),
        (9, 1) => cyclic(9, id, "C9"),
        (9, 2) => direct(&c3(), &c3(), id, "C3xC3"),
        (10, 1) => dihedral(10, id, "D10"),
        (10, 2) => cyclic(10, id, "C10"),
        (11, 1) => cyclic(11, id, "C11"),
        (12, 1) => dicyclic(12, id, "C3:C4"),
        (12, 2) => cyclic(12, id, "C12"),
        (12, 3) => from_perm_gens(
            4,
            &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], // (0 1 2) and (0 1)(2 3)
            id,
            "A4",
        ),
        (12, 4) => dihedral(12, id, "D12"),
        _ => {
            return Err(Error::UnknownGroupId(format!("{},{}", id.0, id.1)));
        }
    })
}

/// Parses a group identifier: `"order,index"` or a canonical name like
/// `"D8"` or `"C2xC2"`.
pub fn parse_group(s: &str) -> Result<Arc<Group>> {
    let s = s.trim();
    if let Some((o, i)) = s.split_once(',') {
        let o: u32 = o
            .trim()
            .parse()
            .map_err(|_| Error::UnknownGroupId(s.to_string()))?;
        let i: u32 = i
            .trim()
            .parse()
            .map_err(|_| Error::UnknownGroupId(s.to_string()))?;
        return catalog((o, i));
    }
    for id in CATALOG_IDS {
        let g = catalog(id)?;
        if g.name.eq_ignore_ascii_case(s) {
            return Ok(g);
        }
    }
    // common alias: the Klein four-group is DihedralGroup(4) in GAP
    if s.eq_ignore_ascii_case("D4") || s.eq_ignore_ascii_case("K4") {
        return catalog((4, 2));
    }
    Err(Error::UnknownGroupId(s.to_string()))
}

/// A verified group homomorphism as an element-index map.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub source: Arc<Group>,
    pub target: Arc<Group>,
    pub map: Vec<usize>,
}

/// Extends generator images to a homomorphism along the Cayley spanning
/// tree, then verifies multiplicativity on every pair.
pub fn group_hom(src: &Arc<Group>, tgt: &Arc<Group>, gen_images: &[usize]) -> Result<GroupHom> {
    if gen_images.len() != src.generators.len() {
        return Err(Error::DimensionMismatch(format!(
            "expected {} generator images, got {}",
            src.generators.len(),
            gen_images.len()
        )));
    }
    if gen_images.iter().any(|&g| g >= tgt.n) {
        return Err(Error::OutsideTarget);
    }
    let mut map = vec![usize::MAX; src.n];
    map[src.id_index] = tgt.id_index;
    for &g in &src.bfs_order() {
        if g == src.id_index {
            continue;
        }
        let (h, i) = src.tree[g].expect("tree covers the group");
        map[g] = tgt.mul[map[h]][gen_images[i]];
    }
    for a in 0..src.n {
        for b in 0..src.n {
            if map[src.mul[a][b]] != tgt.mul[map[a]][map[b]] {
                return Err(Error::InconsistentImages(format!(
                    "map({a}*{b}) != map({a})map({b})"
                )));
            }
        }
    }
    Ok(GroupHom {
        source: src.clone(),
        target: tgt.clone(),
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_covers_table_and_passes_checks() {
        let mut seen = std::collections::HashSet::new();
        for id in CATALOG_IDS {
            let g = catalog(id).unwrap();
            assert_eq!(g.n as u32, id.0, "{:?}", id);
            assert!(seen.insert(id));
        }
        assert_eq!(seen.len(), 23);
        assert!(matches!(catalog((8, 6)), Err(Error::UnknownGroupId(_))));
    }

    #[test]
    fn isomorphism_type_invariants() {
        assert_eq!(catalog((1, 1)).unwrap().n, 1);
        let s3 = catalog((6, 1)).unwrap();
        assert!(!s3.is_abelian());
        let k4 = catalog((4, 2)).unwrap();
        assert!(k4.order_statistics() == vec![1, 2, 2, 2]);
        // D8 vs Q8: Q8 has a single involution
        let d8 = catalog((8, 3)).unwrap();
        let q8 = catalog((8, 4)).unwrap();
        assert_eq!(d8.order_statistics(), vec![1, 2, 2, 2, 2, 2, 4, 4]);
        assert_eq!(q8.order_statistics(), vec![1, 2, 4, 4, 4, 4, 4, 4]);
        // C4xC2 vs C2^3
        let c4c2 = catalog((8, 2)).unwrap();
        let c2cubed = catalog((8, 5)).unwrap();
        assert_ne!(c4c2.order_statistics(), c2cubed.order_statistics());
        let a4 = catalog((12, 3)).unwrap();
        assert!(!a4.is_abelian());
        assert_eq!(
            a4.order_statistics(),
            vec![1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3]
        );
        let dic3 = catalog((12, 1)).unwrap();
        assert!(!dic3.is_abelian());
        assert_eq!(
            dic3.order_statistics().iter().filter(|&&o| o == 4).count(),
            6
        );
    }

    #[test]
    fn homs_extend_and_reject() {
        let c4 = catalog((4, 1)).unwrap();
        let c2 = catalog((2, 1)).unwrap();
        let c3 = catalog((3, 1)).unwrap();
        // identity on C4
        let idh = group_hom(&c4, &c4, &[1]).unwrap();
        assert_eq!(idh.map, vec![0, 1, 2, 3]);
        // the unique surjection C4 -> C2
        let s = group_hom(&c4, &c2, &[1]).unwrap();
        assert_eq!(s.map, vec![0, 1, 0, 1]);
        // order obstruction C2 -> C3
        assert!(group_hom(&c2, &c3, &[1]).is_err());
    }
}
