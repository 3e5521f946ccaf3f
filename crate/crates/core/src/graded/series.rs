/// Coefficients of `Π_k 1/(1 − t^{w_k})` up to `t^N`.
pub fn product_series(weights: &[u32], max_degree: u64) -> Vec<u64> {
    let top = max_degree as usize;
    let mut c = vec![0u64; top + 1];
    c[0] = 1;
    for &w in weights {
        let w = w as usize;
        for q in w..=top {
            c[q] += c[q - w];
        }
    }
    c
}

/// `1/((1−t)^a(1−t^b)^c…)` grouped by exponent, e.g. `1/((1−t)^2(1−t^3)^2)`.
pub fn product_series_text(weights: &[u32]) -> String {
    let mut ws = weights.to_vec();
    ws.sort_unstable();
    let mut groups: Vec<(u32, usize)> = Vec::new();
    for w in ws {
        match groups.last_mut() {
            Some((g, n)) if *g == w => *n += 1,
            _ => groups.push((w, 1)),
        }
    }
    let factor = |w: u32| if w == 1 { "(1−t)".to_string() } else { format!("(1−t^{w})") };
    let parts: Vec<String> = groups
        .iter()
        .map(|&(w, n)| if n == 1 { factor(w) } else { format!("{}^{n}", factor(w)) })
        .collect();
    if parts.len() == 1 && groups[0].1 > 1 {
        format!("1/{}", parts[0])
    } else {
        format!("1/({})", parts.concat())
    }
}
