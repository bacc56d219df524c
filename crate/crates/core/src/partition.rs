//! Integer partitions, used to render the raw pairs of a given size.

/// All partitions of `n`, each as a nonincreasing list of positive parts.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for part in (1..=rest.min(max_part)).rev() {
        cur.push(part);
        fill(rest - part, part, cur, out);
        cur.pop();
    }
}

/// Renders a nonincreasing partition as a nondecreasing sequence of `len`
/// entries, zero-padded on the left.
pub fn as_sequence(parts: &[u32], len: usize) -> Vec<u32> {
    debug_assert!(parts.len() <= len);
    let mut v = vec![0; len - parts.len()];
    v.extend(parts.iter().rev());
    v
}
