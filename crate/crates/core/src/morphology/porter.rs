//! The Porter (1980) suffix-stripping algorithm for English.
//!
//! Works on lowercase characters. Any character other than `a e i o u` is a
//! consonant, and `y` is a consonant only when preceded by a vowel or at the
//! start of the word. Words of one or two letters are returned unchanged.

pub fn stem(word: &str) -> String {
    let mut w: Vec<char> = word.to_lowercase().chars().collect();
    if w.len() <= 2 {
        return w.into_iter().collect();
    }
    step1a(&mut w);
    step1b(&mut w);
    step1c(&mut w);
    step2(&mut w);
    step3(&mut w);
    step4(&mut w);
    step5a(&mut w);
    step5b(&mut w);
    w.into_iter().collect()
}

fn is_consonant(w: &[char], i: usize) -> bool {
    match w[i] {
        'a' | 'e' | 'i' | 'o' | 'u' => false,
        'y' => i == 0 || !is_consonant(w, i - 1),
        _ => true,
    }
}

/// Number of `VC` sequences in `w[..len]`, the `m` of `[C](VC){m}[V]`.
fn measure(w: &[char], len: usize) -> usize {
    let mut m = 0;
    let mut i = 0;
    while i < len && is_consonant(w, i) {
        i += 1;
    }
    loop {
        while i < len && !is_consonant(w, i) {
            i += 1;
        }
        if i >= len {
            return m;
        }
        while i < len && is_consonant(w, i) {
            i += 1;
        }
        m += 1;
    }
}

fn has_vowel(w: &[char], len: usize) -> bool {
    (0..len).any(|i| !is_consonant(w, i))
}

fn ends_double_consonant(w: &[char], len: usize) -> bool {
    len >= 2 && w[len - 1] == w[len - 2] && is_consonant(w, len - 1)
}

/// `*o`: stem ends consonant-vowel-consonant, the last not `w`, `x` or `y`.
fn ends_cvc(w: &[char], len: usize) -> bool {
    len >= 3
        && is_consonant(w, len - 3)
        && !is_consonant(w, len - 2)
        && is_consonant(w, len - 1)
        && !matches!(w[len - 1], 'w' | 'x' | 'y')
}

/// Stem length if `w` ends with `suffix`.
fn ends_with(w: &[char], suffix: &str) -> Option<usize> {
    let s: Vec<char> = suffix.chars().collect();
    (w.len() >= s.len() && w[w.len() - s.len()..] == s[..]).then(|| w.len() - s.len())
}

fn replace(w: &mut Vec<char>, stem_len: usize, with: &str) {
    w.truncate(stem_len);
    w.extend(with.chars());
}

/// Applies the rule with the longest matching suffix, if its stem has `m > min_m`.
fn apply_longest(w: &mut Vec<char>, rules: &[(&str, &str)], min_m: usize) {
    let best = rules
        .iter()
        .filter_map(|(suffix, repl)| ends_with(w, suffix).map(|stem| (stem, *repl)))
        .min_by_key(|(stem, _)| *stem);
    if let Some((stem, repl)) = best {
        if measure(w, stem) > min_m {
            replace(w, stem, repl);
        }
    }
}

fn step1a(w: &mut Vec<char>) {
    if let Some(s) = ends_with(w, "sses") {
        replace(w, s, "ss");
    } else if let Some(s) = ends_with(w, "ies") {
        replace(w, s, "i");
    } else if ends_with(w, "ss").is_some() {
    } else if let Some(s) = ends_with(w, "s") {
        w.truncate(s);
    }
}

fn step1b(w: &mut Vec<char>) {
    if let Some(s) = ends_with(w, "eed") {
        if measure(w, s) > 0 {
            replace(w, s, "ee");
        }
        return;
    }
    let stripped = ["ed", "ing"]
        .iter()
        .find_map(|suf| ends_with(w, suf).filter(|&s| has_vowel(w, s)));
    let Some(s) = stripped else { return };
    w.truncate(s);
    if ["at", "bl", "iz"].iter().any(|suf| ends_with(w, suf).is_some()) {
        w.push('e');
    } else if ends_double_consonant(w, w.len()) && !matches!(w[w.len() - 1], 'l' | 's' | 'z') {
        w.pop();
    } else if measure(w, w.len()) == 1 && ends_cvc(w, w.len()) {
        w.push('e');
    }
}

fn step1c(w: &mut [char]) {
    if let Some(s) = ends_with(w, "y") {
        if has_vowel(w, s) {
            w[s] = 'i';
        }
    }
}

fn step2(w: &mut Vec<char>) {
    const RULES: &[(&str, &str)] = &[
        ("ational", "ate"),
        ("tional", "tion"),
        ("enci", "ence"),
        ("anci", "ance"),
        ("izer", "ize"),
        ("abli", "able"),
        ("alli", "al"),
        ("entli", "ent"),
        ("eli", "e"),
        ("ousli", "ous"),
        ("ization", "ize"),
        ("ation", "ate"),
        ("ator", "ate"),
        ("alism", "al"),
        ("iveness", "ive"),
        ("fulness", "ful"),
        ("ousness", "ous"),
        ("aliti", "al"),
        ("iviti", "ive"),
        ("biliti", "ble"),
    ];
    apply_longest(w, RULES, 0);
}

fn step3(w: &mut Vec<char>) {
    const RULES: &[(&str, &str)] = &[
        ("icate", "ic"),
        ("ative", ""),
        ("alize", "al"),
        ("iciti", "ic"),
        ("ical", "ic"),
        ("ful", ""),
        ("ness", ""),
    ];
    apply_longest(w, RULES, 0);
}

fn step4(w: &mut Vec<char>) {
    const SUFFIXES: &[&str] = &[
        "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement", "ment", "ent", "ion", "ou",
        "ism", "ate", "iti", "ous", "ive", "ize",
    ];
    let best = SUFFIXES
        .iter()
        .filter_map(|suf| ends_with(w, suf).map(|s| (s, *suf)))
        .min_by_key(|(s, _)| *s);
    let Some((s, suffix)) = best else { return };
    if suffix == "ion" && !(s > 0 && matches!(w[s - 1], 's' | 't')) {
        return;
    }
    if measure(w, s) > 1 {
        w.truncate(s);
    }
}

fn step5a(w: &mut Vec<char>) {
    if let Some(s) = ends_with(w, "e") {
        let m = measure(w, s);
        if m > 1 || (m == 1 && !ends_cvc(w, s)) {
            w.truncate(s);
        }
    }
}

fn step5b(w: &mut Vec<char>) {
    let len = w.len();
    if measure(w, len) > 1 && ends_double_consonant(w, len) && w[len - 1] == 'l' {
        w.pop();
    }
}
