//! Typographic rendering of the plain text form: `x2^-1` becomes `x₂⁻¹`
//! and binary minus becomes `−`.

fn sub(c: char) -> char {
    char::from_u32('₀' as u32 + c.to_digit(10).unwrap()).unwrap()
}

fn sup(c: char) -> char {
    match c {
        '1' => '¹',
        '2' => '²',
        '3' => '³',
        '-' => '⁻',
        d => char::from_u32('⁰' as u32 + d.to_digit(10).unwrap()).unwrap(),
    }
}

pub fn pretty(text: &str) -> String {
    let chars: Vec<char> = text.chars().collect();
    let mut out = String::with_capacity(text.len());
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            'x' => {
                out.push('x');
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    out.push(sub(chars[i]));
                    i += 1;
                }
                continue;
            }
            '^' => {
                i += 1;
                if i < chars.len() && chars[i] == '-' {
                    out.push(sup('-'));
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    out.push(sup(chars[i]));
                    i += 1;
                }
                continue;
            }
            '-' => out.push('−'),
            '*' => {}
            _ => out.push(c),
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::pretty;

    #[test]
    fn subscripts_and_powers() {
        assert_eq!(pretty("x2 - t^-1"), "x₂ − t⁻¹");
        assert_eq!(pretty("x1^2*x2 + 3/2"), "x₁²x₂ + 3/2");
    }
}
