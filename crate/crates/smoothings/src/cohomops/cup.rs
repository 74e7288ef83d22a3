use std::collections::HashMap;
use std::sync::Mutex;

use crate::complex_core::SimplicialComplex;

/// Front/back vertex positions of one term of a cup-`i` product on an
/// `n`-simplex.
pub(crate) type Pattern = (Vec<usize>, Vec<usize>);

/// Terms of `a ∪_i b` on an `n`-simplex for a `p`-cochain `a` and a
/// `q`-cochain `b`, `n = p + q - i`.
///
/// For `0 <= j_0 < … < j_i <= n` the vertex range is cut into the
/// intervals `[0, j_0], [j_0, j_1], …, [j_i, n]`; `a` reads the union of
/// the even-numbered intervals and `b` the odd-numbered ones. Only terms
/// whose pieces have the right dimensions contribute.
pub(crate) fn cup_i_patterns(p: usize, q: usize, i: usize) -> Vec<Pattern> {
    type Cache = HashMap<(usize, usize, usize), Vec<Pattern>>;
    static CACHE: Mutex<Option<Cache>> = Mutex::new(None);
    let key = (p, q, i);
    if let Some(hit) = CACHE.lock().expect("pattern cache").get_or_insert_with(HashMap::new).get(&key) {
        return hit.clone();
    }
    let n = p + q - i;
    let mut out = Vec::new();
    let mut cuts = Vec::with_capacity(i + 1);
    choose(0, n, i + 1, &mut cuts, &mut |cuts| {
        let mut bounds = Vec::with_capacity(i + 3);
        bounds.push(0);
        bounds.extend_from_slice(cuts);
        bounds.push(n);
        let mut front = Vec::new();
        let mut back = Vec::new();
        for (t, w) in bounds.windows(2).enumerate() {
            let side = if t % 2 == 0 { &mut front } else { &mut back };
            side.extend(w[0]..=w[1]);
        }
        if front.len() == p + 1 && back.len() == q + 1 {
            out.push((front, back));
        }
    });
    CACHE
        .lock()
        .expect("pattern cache")
        .get_or_insert_with(HashMap::new)
        .insert(key, out.clone());
    out
}

fn choose(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for j in start..=n {
        cur.push(j);
        choose(j + 1, n, k, cur, f);
        cur.pop();
    }
}

/// Evaluates `Σ_terms a(front) · b(back)` on every simplex of degree
/// `p + q - i`, reduced mod `m`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn apply_patterns(
    k: &SimplicialComplex,
    a: &[i64],
    p: usize,
    b: &[i64],
    q: usize,
    patterns: &[Pattern],
    n: usize,
    m: u64,
) -> Vec<i64> {
    let mut out = vec![0i64; k.count(n)];
    let mut face_a = Vec::with_capacity(p + 1);
    let mut face_b = Vec::with_capacity(q + 1);
    for (s, value) in out.iter_mut().enumerate() {
        let vs = k.simplex(n, s);
        let mut acc: i128 = 0;
        for (front, back) in patterns {
            face_a.clear();
            face_a.extend(front.iter().map(|&t| vs[t]));
            let x = a[k.index_of(&face_a).expect("front face present")];
            if x == 0 {
                continue;
            }
            face_b.clear();
            face_b.extend(back.iter().map(|&t| vs[t]));
            let y = b[k.index_of(&face_b).expect("back face present")];
            acc += x as i128 * y as i128;
        }
        *value = if m == 0 {
            i64::try_from(acc).expect("cup product fits in i64")
        } else {
            acc.rem_euclid(m as i128) as i64
        };
    }
    out
}
