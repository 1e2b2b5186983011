//! Parsers for the small input grammars: divisor classes (`X,Y` or symbolic
//! `3h-A` forms) and gram-matrix profiles (`g11,g12,g22`).

use detquartic::{DivisorClass, GramLattice};

/// Parse a divisor class. Accepts the coordinate form `X,Y` (meaning
/// `Xh + YA`) and symbolic combinations of the generators such as `h`,
/// `A`, `-h`, `3h-A`, `2A-5h` or `0`.
pub fn parse_divisor(input: &str) -> Result<DivisorClass, String> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty divisor class".into());
    }
    if s.contains(',') {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 2 {
            return Err(format!("expected X,Y with two coordinates, got '{input}'"));
        }
        let x = parts[0].parse::<i64>().map_err(|e| format!("bad x coordinate '{}': {e}", parts[0]))?;
        let y = parts[1].parse::<i64>().map_err(|e| format!("bad y coordinate '{}': {e}", parts[1]))?;
        return Ok(DivisorClass::new(x, y));
    }
    if s == "0" {
        return Ok(DivisorClass::ZERO);
    }
    let chars: Vec<char> = s.chars().collect();
    let mut x = 0i64;
    let mut y = 0i64;
    let mut i = 0;
    let mut first = true;
    while i < chars.len() {
        let sign = match chars[i] {
            '+' => {
                i += 1;
                1
            }
            '-' => {
                i += 1;
                -1
            }
            _ if first => 1,
            c => return Err(format!("expected '+' or '-' before '{c}' in '{input}'")),
        };
        first = false;
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coeff = if start == i {
            1
        } else {
            chars[start..i]
                .iter()
                .collect::<String>()
                .parse::<i64>()
                .map_err(|e| format!("bad coefficient in '{input}': {e}"))?
        };
        match chars.get(i) {
            Some('h') => x += sign * coeff,
            Some('A') | Some('a') => y += sign * coeff,
            Some(c) => return Err(format!("unknown generator '{c}' in '{input}' (use h or A)")),
            None => return Err(format!("dangling coefficient at the end of '{input}'")),
        }
        i += 1;
    }
    Ok(DivisorClass::new(x, y))
}

/// Parse `g11,g12,g22` into a validated lattice.
pub fn parse_gram(input: &str) -> Result<GramLattice, String> {
    let parts: Vec<&str> = input.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected g11,g12,g22 with three entries, got '{input}'"));
    }
    let mut values = [0i64; 3];
    for (slot, part) in values.iter_mut().zip(&parts) {
        *slot = part.parse::<i64>().map_err(|e| format!("bad gram entry '{part}': {e}"))?;
    }
    GramLattice::new(values[0], values[1], values[2]).map_err(|e| e.to_string())
}
