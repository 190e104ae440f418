//! Deliberately naive checkers, the oracle's ground truth.
//!
//! Everything here quantifies literally over element lists with no
//! shortcuts, and is kept textually independent of the `decomposition` and
//! `greens` modules it cross-examines. Duplication is the point: two
//! implementations have to agree on every instance.
//!
//! Submodules and subsets are sorted id lists; membership is a binary
//! search.

use crate::module::Enumeration;

pub fn contains(s: &[usize], x: usize) -> bool {
    s.binary_search(&x).is_ok()
}

/// Elementwise sums of two sets, sorted and deduplicated.
pub fn sum_lists(en: &Enumeration, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            out.push(en.add_id(x, y));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

pub fn inter_lists(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().filter(|x| contains(b, **x)).copied().collect()
}

pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|&x| contains(b, x))
}

pub fn is_submodule(en: &Enumeration, s: &[usize]) -> bool {
    if !contains(s, en.zero_id()) {
        return false;
    }
    for &a in s {
        for r in 0..en.carrier_size() {
            if !contains(s, en.scale_id(r, a)) {
                return false;
            }
        }
        for &b in s {
            if !contains(s, en.add_id(a, b)) {
                return false;
            }
        }
    }
    true
}

pub fn lacks_zero_sums(en: &Enumeration, s: &[usize]) -> bool {
    let zero = en.zero_id();
    for &a in s {
        for &b in s {
            if en.add_id(a, b) == zero && (a != zero || b != zero) {
                return false;
            }
        }
    }
    true
}

fn span_list(en: &Enumeration, gens: &[usize]) -> Vec<usize> {
    let mut set = vec![en.zero_id()];
    let mut work: Vec<usize> = Vec::new();
    for &g in gens {
        if !set.contains(&g) {
            set.push(g);
            work.push(g);
        }
    }
    while let Some(x) = work.pop() {
        for r in 0..en.carrier_size() {
            let y = en.scale_id(r, x);
            if !set.contains(&y) {
                set.push(y);
                work.push(y);
            }
        }
        let mut i = 0;
        while i < set.len() {
            let y = en.add_id(set[i], x);
            i += 1;
            if !set.contains(&y) {
                set.push(y);
                work.push(y);
            }
        }
    }
    set.sort_unstable();
    set
}

/// Every submodule contained in `ambient`. For tiny ambients this is the
/// full power-set filter; otherwise an independent breadth-first search
/// over single-generator extensions.
pub fn all_submodules(en: &Enumeration, ambient: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    if ambient.len() <= 16 {
        let n = ambient.len();
        for mask in 0u32..(1 << n) {
            let subset: Vec<usize> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| ambient[i])
                .collect();
            if is_submodule(en, &subset) {
                out.push(subset);
            }
        }
    } else {
        let mut seen = std::collections::BTreeSet::<Vec<usize>>::new();
        let mut queue = std::collections::VecDeque::new();
        let zero = span_list(en, &[]);
        seen.insert(zero.clone());
        queue.push_back(zero);
        while let Some(s) = queue.pop_front() {
            for &v in ambient {
                if contains(&s, v) {
                    continue;
                }
                let mut gens = s.clone();
                gens.push(v);
                let t = span_list(en, &gens);
                if !seen.contains(&t) {
                    seen.insert(t.clone());
                    queue.push_back(t);
                }
            }
        }
        out = seen.into_iter().collect();
    }
    out.sort();
    out
}

/// `W + T` covers the ambient.
pub fn spans(en: &Enumeration, ambient: &[usize], w: &[usize], t: &[usize]) -> bool {
    sum_lists(en, w, t) == ambient
}

pub fn trivial_intersection(en: &Enumeration, ambient: &[usize], w: &[usize], t: &[usize]) -> bool {
    spans(en, ambient, w, t) && inter_lists(w, t) == vec![en.zero_id()]
}

/// Weak complement: `W + T = V` and `(w + T) ∩ T = ∅` for nonzero `w`.
pub fn is_weak(en: &Enumeration, ambient: &[usize], w: &[usize], t: &[usize]) -> bool {
    if !spans(en, ambient, w, t) {
        return false;
    }
    let zero = en.zero_id();
    for &wi in w {
        if wi == zero {
            continue;
        }
        for &t1 in t {
            if contains(t, en.add_id(wi, t1)) {
                return false;
            }
        }
    }
    true
}

/// Semidirect complement: distinct `W`-parts give disjoint translates,
/// i.e. `w1 + t1 = w2 + t2` forces `w1 = w2`.
pub fn is_semidirect(en: &Enumeration, ambient: &[usize], w: &[usize], t: &[usize]) -> bool {
    if !spans(en, ambient, w, t) {
        return false;
    }
    let mut seen = vec![usize::MAX; en.size()];
    for &w1 in w {
        for &t1 in t {
            let v = en.add_id(w1, t1);
            if seen[v] != usize::MAX && seen[v] != w1 {
                return false;
            }
            seen[v] = w1;
        }
    }
    true
}

/// Directness of a family: the number of part tuples summing to each
/// target element is exactly one.
pub fn is_direct_family(en: &Enumeration, target: &[usize], parts: &[Vec<usize>]) -> bool {
    let mut reps = vec![0u64; en.size()];
    reps[en.zero_id()] = 1;
    for p in parts {
        let mut next = vec![0u64; en.size()];
        for v in 0..en.size() {
            if reps[v] > 0 {
                for &x in p {
                    next[en.add_id(v, x)] += reps[v];
                }
            }
        }
        reps = next;
    }
    target.iter().all(|&v| reps[v] == 1) && reps.iter().sum::<u64>() == target.len() as u64
}

/// Direct complement: every ambient element has exactly one expression
/// `w + t`.
pub fn is_direct(en: &Enumeration, ambient: &[usize], w: &[usize], t: &[usize]) -> bool {
    let mut reps = vec![0usize; en.size()];
    for &wi in w {
        for &ti in t {
            reps[en.add_id(wi, ti)] += 1;
        }
    }
    ambient.iter().all(|&v| reps[v] == 1)
        && reps.iter().sum::<usize>() == ambient.len()
}

/// Summand absorbing, criterion by literal quantification.
pub fn is_sa(en: &Enumeration, ambient: &[usize], s: &[usize]) -> bool {
    for &x in ambient {
        for &y in ambient {
            if contains(s, en.add_id(x, y)) && !(contains(s, x) && contains(s, y)) {
                return false;
            }
        }
    }
    true
}

/// The projection table `v -> w` for a semidirect pair, `None` otherwise.
pub fn projection_map(
    en: &Enumeration,
    ambient: &[usize],
    w: &[usize],
    t: &[usize],
) -> Option<Vec<usize>> {
    if !is_semidirect(en, ambient, w, t) {
        return None;
    }
    let mut map = vec![usize::MAX; en.size()];
    for &wi in w {
        for &ti in t {
            map[en.add_id(wi, ti)] = wi;
        }
    }
    Some(map)
}

pub fn direct_complements(
    en: &Enumeration,
    ambient: &[usize],
    subs: &[Vec<usize>],
    t: &[usize],
) -> Vec<Vec<usize>> {
    subs.iter()
        .filter(|c| is_direct(en, ambient, t, c))
        .cloned()
        .collect()
}

pub fn weak_complements(
    en: &Enumeration,
    ambient: &[usize],
    subs: &[Vec<usize>],
    w: &[usize],
) -> Vec<Vec<usize>> {
    subs.iter()
        .filter(|t| is_weak(en, ambient, w, t))
        .cloned()
        .collect()
}

pub fn is_direct_summand(
    en: &Enumeration,
    ambient: &[usize],
    subs: &[Vec<usize>],
    t: &[usize],
) -> bool {
    subs.iter().any(|c| is_direct(en, ambient, t, c))
}

/// Indecomposable as a module: nonzero, and no pair of nonzero submodules
/// decomposes it directly.
pub fn is_indecomposable(en: &Enumeration, subs: &[Vec<usize>], t: &[usize]) -> bool {
    if t.len() <= 1 {
        return false;
    }
    let inside: Vec<&Vec<usize>> = subs
        .iter()
        .filter(|s| s.len() > 1 && s.len() < t.len() && is_subset(s, t))
        .collect();
    for a in &inside {
        for b in &inside {
            if is_direct(en, t, a, b) {
                return false;
            }
        }
    }
    true
}

pub fn indecomposable_summands(
    en: &Enumeration,
    ambient: &[usize],
    subs: &[Vec<usize>],
) -> Vec<Vec<usize>> {
    subs.iter()
        .filter(|t| is_direct_summand(en, ambient, subs, t) && is_indecomposable(en, subs, t))
        .cloned()
        .collect()
}

/// Green's preorder by literal existential search.
pub fn preceq(en: &Enumeration, ambient: &[usize], x: usize, y: usize) -> bool {
    ambient.iter().any(|&z| en.add_id(x, z) == y)
}

/// The full preorder, each entry by the literal existential search.
pub fn preceq_matrix(en: &Enumeration, ambient: &[usize]) -> Vec<bool> {
    let n = en.size();
    let mut le = vec![false; n * n];
    for &x in ambient {
        for &y in ambient {
            le[x * n + y] = preceq(en, ambient, x, y);
        }
    }
    le
}

pub fn is_ub(en: &Enumeration, ambient: &[usize]) -> bool {
    for &x in ambient {
        for &y in ambient {
            let xy = en.add_id(x, y);
            if xy == x {
                continue;
            }
            for &z in ambient {
                if en.add_id(xy, z) == x {
                    return false;
                }
            }
        }
    }
    true
}

/// Equivalence classes of mutual preceq, ordered by least member.
pub fn classes(n: usize, ambient: &[usize], le: &[bool]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &x in ambient {
        let mut placed = false;
        for class in out.iter_mut() {
            let rep = class[0];
            if le[x * n + rep] && le[rep * n + x] {
                class.push(x);
                placed = true;
                break;
            }
        }
        if !placed {
            out.push(vec![x]);
        }
    }
    out
}

pub fn class_index(classes: &[Vec<usize>], x: usize) -> usize {
    classes
        .iter()
        .position(|c| contains(c, x))
        .expect("element belongs to a class")
}

pub fn is_convex(n: usize, ambient: &[usize], le: &[bool], s: &[usize]) -> bool {
    for &v in ambient {
        if contains(s, v) {
            continue;
        }
        let below = s.iter().any(|&s1| le[s1 * n + v]);
        let above = s.iter().any(|&s2| le[v * n + s2]);
        if below && above {
            return false;
        }
    }
    true
}

/// Convex closure of one point, iterated to a fixpoint.
pub fn convex_closure_of_point(n: usize, ambient: &[usize], le: &[bool], start: usize) -> Vec<usize> {
    let mut hull = vec![start];
    loop {
        let mut grew = false;
        for &v in ambient {
            if contains(&hull, v) {
                continue;
            }
            let below = hull.iter().any(|&s1| le[s1 * n + v]);
            let above = hull.iter().any(|&s2| le[v * n + s2]);
            if below && above {
                hull.push(v);
                hull.sort_unstable();
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    hull.sort_unstable();
    hull
}
