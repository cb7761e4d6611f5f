//! Signed Gauss codes.
//!
//! A code is a cyclic word in which every crossing id appears twice, once as
//! an over pass and once as an under pass, both carrying the crossing's sign.
//! Text form is `O1-U2+O3+U1-…`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Pass {
    Over,
    Under,
}

impl Pass {
    pub fn other(self) -> Pass {
        match self {
            Pass::Over => Pass::Under,
            Pass::Under => Pass::Over,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Pass::Over => 'O',
            Pass::Under => 'U',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub id: usize,
    pub pass: Pass,
    pub sign: Sign,
}

impl Symbol {
    pub fn new(pass: Pass, id: usize, sign: Sign) -> Self {
        Symbol { id, pass, sign }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.pass.letter(), self.id, self.sign.symbol())
    }
}

/// A well-formed Gauss code with ids numbered `1..=k` by first appearance.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussCode {
    symbols: Vec<Symbol>,
}

impl GaussCode {
    /// Checks the code and renumbers its ids by first appearance.
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        let max = symbols.iter().map(|s| s.id).max().unwrap_or(0);
        let mut seen: Vec<Vec<Symbol>> = vec![Vec::new(); max + 1];
        for s in &symbols {
            if s.id == 0 {
                return Err(Error::BadCode("crossing ids start at 1".into()));
            }
            seen[s.id].push(*s);
        }
        for (id, occ) in seen.iter().enumerate() {
            match occ.as_slice() {
                [] => {}
                [a, b] => {
                    if a.pass == b.pass {
                        return Err(Error::BadCode(format!(
                            "crossing {id} is passed {} twice",
                            a.pass.letter()
                        )));
                    }
                    if a.sign != b.sign {
                        return Err(Error::BadCode(format!("crossing {id} has mismatched signs")));
                    }
                }
                _ => {
                    return Err(Error::BadCode(format!(
                        "crossing {id} appears {} times",
                        occ.len()
                    )))
                }
            }
        }
        Ok(GaussCode { symbols: renumber(&symbols) })
    }

    pub fn empty() -> Self {
        GaussCode::default()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn crossings(&self) -> usize {
        self.symbols.len() / 2
    }

    /// Sign of each crossing, indexed by `id - 1`.
    pub fn signs(&self) -> Vec<Sign> {
        let mut out = vec![Sign::Plus; self.crossings()];
        for s in &self.symbols {
            out[s.id - 1] = s.sign;
        }
        out
    }

    /// The two positions of each crossing, indexed by `id - 1`, in increasing order.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(usize::MAX, usize::MAX); self.crossings()];
        for (k, s) in self.symbols.iter().enumerate() {
            let slot = &mut out[s.id - 1];
            if slot.0 == usize::MAX {
                slot.0 = k;
            } else {
                slot.1 = k;
            }
        }
        out
    }

    /// The code read from position `k`, ids renumbered.
    pub fn rotated(&self, k: usize) -> GaussCode {
        if self.is_empty() {
            return self.clone();
        }
        let k = k % self.len();
        let word: Vec<Symbol> = self.symbols[k..].iter().chain(&self.symbols[..k]).copied().collect();
        GaussCode { symbols: renumber(&word) }
    }

    /// The code of the same diagram traversed the other way round.
    pub fn reversed(&self) -> GaussCode {
        let word: Vec<Symbol> = self.symbols.iter().rev().copied().collect();
        GaussCode { symbols: renumber(&word) }
    }

    /// The code of the mirror image: every pass swapped and every sign flipped.
    pub fn mirrored(&self) -> GaussCode {
        let word = self
            .symbols
            .iter()
            .map(|s| Symbol { pass: s.pass.other(), sign: s.sign.flip(), ..*s })
            .collect();
        GaussCode { symbols: word }
    }

    /// Least representative over rotations, and reversals if allowed.
    pub fn canonicalize(&self, allow_reversal: bool) -> GaussCode {
        let mut best = self.rotated(0);
        let mut consider = |code: &GaussCode| {
            for k in 0..code.len() {
                let cand = code.rotated(k);
                if cand < best {
                    best = cand;
                }
            }
        };
        consider(self);
        if allow_reversal {
            consider(&self.reversed());
        }
        best
    }

    /// Longest cyclic run of symbols with pairwise distinct ids.
    pub fn max_nonrepeating(&self) -> usize {
        let (best, _) = self.max_nonrepeating_run();
        best
    }

    /// Length and starting position of a longest cyclic nonrepeating run;
    /// the smallest start wins ties.
    pub fn max_nonrepeating_run(&self) -> (usize, usize) {
        let mut best = (0, 0);
        for start in 0..self.len() {
            let run = self.nonrepeating_run_at(start);
            if run > best.0 {
                best = (run, start);
            }
        }
        best
    }

    /// Length of the nonrepeating run beginning at `start`.
    pub fn nonrepeating_run_at(&self, start: usize) -> usize {
        let len = self.len();
        let n = self.crossings();
        let mut seen = vec![false; n + 1];
        let mut run = 0;
        while run < n {
            let id = self.symbols[(start + run) % len].id;
            if seen[id] {
                break;
            }
            seen[id] = true;
            run += 1;
        }
        run
    }

    /// Chord interlacement: `m[a][b]` iff exactly one end of chord `b` lies
    /// strictly between the two ends of chord `a`.
    pub fn interlacement(&self) -> Vec<Vec<bool>> {
        let pos = self.positions();
        let n = pos.len();
        let mut m = vec![vec![false; n]; n];
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    let (p, q) = pos[a];
                    let inside = |x: usize| p < x && x < q;
                    m[a][b] = inside(pos[b].0) != inside(pos[b].1);
                }
            }
        }
        m
    }

    /// Whether the underlying Gauss word is realized by a planar curve,
    /// so that the code needs no virtual crossings.
    ///
    /// Uses the three interlacement conditions of Rosenstiehl: every chord
    /// interlaces an even number of chords; non-interlaced chords share an
    /// even number of interlacers; and the interlaced pairs sharing an even
    /// number of interlacers form a cut of the interlacement graph.
    pub fn is_realizable_planar(&self) -> bool {
        let il = self.interlacement();
        let n = il.len();
        let shared = |a: usize, b: usize| (0..n).filter(|&c| il[a][c] && il[b][c]).count();
        for a in 0..n {
            if il[a].iter().filter(|&&x| x).count() % 2 != 0 {
                return false;
            }
            for b in a + 1..n {
                if !il[a][b] && shared(a, b) % 2 != 0 {
                    return false;
                }
            }
        }
        // Two-colour the interlacement graph so that an edge joins different
        // colours exactly when its endpoints share an even number of interlacers.
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            let mut stack = vec![root];
            while let Some(a) = stack.pop() {
                let ca = colour[a].unwrap();
                for b in 0..n {
                    if !il[a][b] {
                        continue;
                    }
                    let want = ca ^ (shared(a, b) % 2 == 0);
                    match colour[b] {
                        None => {
                            colour[b] = Some(want);
                            stack.push(b);
                        }
                        Some(cb) if cb != want => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Genus of the Carter surface: the closed surface obtained by thickening
    /// the diagram described by the code and capping off its boundary.
    ///
    /// Zero exactly when the signed code is the code of a planar diagram.
    pub fn surface_genus(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        let len = self.len();
        // half-edge 2k is the outgoing end at position k, 2k + 1 the incoming end
        let out = |k: usize| 2 * k;
        let inc = |k: usize| 2 * k + 1;
        let mut next_ccw = vec![0; 2 * len];
        for (a, b) in self.positions() {
            let (o, u) = if self.symbols[a].pass == Pass::Over { (a, b) } else { (b, a) };
            // Over strand heading East: CCW order E, N, W, S.
            let ring = match self.symbols[a].sign {
                Sign::Plus => [out(o), out(u), inc(o), inc(u)],
                Sign::Minus => [out(o), inc(u), inc(o), out(u)],
            };
            for i in 0..4 {
                next_ccw[ring[i]] = ring[(i + 1) % 4];
            }
        }
        // the arc leaving position k arrives at position k + 1
        let other_end = |h: usize| {
            let k = h / 2;
            if h.is_multiple_of(2) {
                inc((k + 1) % len)
            } else {
                out((k + len - 1) % len)
            }
        };
        let mut seen = vec![false; 2 * len];
        let mut faces = 0;
        for h in 0..2 * len {
            if seen[h] {
                continue;
            }
            faces += 1;
            let mut x = h;
            while !seen[x] {
                seen[x] = true;
                x = next_ccw[other_end(x)];
            }
        }
        let vertices = self.crossings() as i64;
        let edges = len as i64;
        let chi = vertices - edges + faces as i64;
        debug_assert!(chi % 2 == 0 && chi <= 2);
        ((2 - chi) / 2) as usize
    }

    /// Fills in crossing signs for a code whose passes are known but whose
    /// signs are not, by picking a planar realization.
    ///
    /// Among the sign vectors making the diagram planar, the one that is
    /// least with `+` before `-` in crossing order is chosen, which fixes the
    /// mirror image by making crossing 1 positive.
    pub fn with_planar_signs(passes: &[(Pass, usize)]) -> Result<GaussCode> {
        let unsigned: Vec<Symbol> = passes.iter().map(|&(p, id)| Symbol::new(p, id, Sign::Plus)).collect();
        let base = GaussCode::new(unsigned)?;
        let n = base.crossings();
        if n > 24 {
            return Err(Error::BadCode(format!("{n} crossings is too many to orient")));
        }
        if !base.is_realizable_planar() {
            return Err(Error::BadCode("unsigned code has no planar realization".into()));
        }
        for mask in 0u32..(1 << n) {
            let code = base.with_signs(|id| if mask >> (n - id) & 1 == 1 { Sign::Minus } else { Sign::Plus });
            if code.surface_genus() == 0 {
                return Ok(code);
            }
        }
        Err(Error::BadCode("unsigned code has no planar realization".into()))
    }

    /// The same word with signs replaced by `sign(id)`.
    pub fn with_signs(&self, sign: impl Fn(usize) -> Sign) -> GaussCode {
        GaussCode {
            symbols: self.symbols.iter().map(|s| Symbol { sign: sign(s.id), ..*s }).collect(),
        }
    }
}

fn renumber(word: &[Symbol]) -> Vec<Symbol> {
    let max = word.iter().map(|s| s.id).max().unwrap_or(0);
    let mut map = vec![0; max + 1];
    let mut next = 0;
    word.iter()
        .map(|s| {
            if map[s.id] == 0 {
                next += 1;
                map[s.id] = next;
            }
            Symbol { id: map[s.id], ..*s }
        })
        .collect()
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl Serialize for GaussCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for GaussCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_code(s)
    }
}

/// Parses either the full grammar `O1-U2+…` or the classical shorthand.
///
/// The shorthand lists crossing ids with an optional leading sign, as in
/// `1-8+5-6+2…`: a positive id is an over pass and a negative id an under
/// pass. Crossing signs are then not written down; they are recovered from a
/// planar realization (see [`GaussCode::with_planar_signs`]).
pub fn parse_code(text: &str) -> Result<GaussCode> {
    let cleaned: Vec<char> = text
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    if cleaned.is_empty() {
        return Err(Error::EmptyCode);
    }
    if cleaned.iter().any(|c| matches!(c, 'O' | 'U' | 'o' | 'u')) {
        parse_full(&cleaned)
    } else {
        parse_shorthand(&cleaned)
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadCode(msg.into())
}

fn take_number(chars: &[char], i: &mut usize) -> Result<usize> {
    let start = *i;
    while *i < chars.len() && chars[*i].is_ascii_digit() {
        *i += 1;
    }
    if start == *i {
        return Err(bad(format!("expected a crossing number at offset {start}")));
    }
    let digits: String = chars[start..*i].iter().collect();
    digits.parse().map_err(|_| bad(format!("crossing number {digits} is too large")))
}

fn parse_full(chars: &[char]) -> Result<GaussCode> {
    let mut symbols = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let pass = match chars[i] {
            'O' | 'o' => Pass::Over,
            'U' | 'u' => Pass::Under,
            c => return Err(bad(format!("expected O or U at offset {i}, found {c:?}"))),
        };
        i += 1;
        let id = take_number(chars, &mut i)?;
        let sign = match chars.get(i) {
            Some('+') => Sign::Plus,
            Some('-') => Sign::Minus,
            _ => return Err(bad(format!("expected + or - after crossing {id}"))),
        };
        i += 1;
        symbols.push(Symbol::new(pass, id, sign));
    }
    GaussCode::new(symbols)
}

fn parse_shorthand(chars: &[char]) -> Result<GaussCode> {
    let mut passes = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let pass = match chars[i] {
            '-' => {
                i += 1;
                Pass::Under
            }
            '+' => {
                i += 1;
                Pass::Over
            }
            _ => Pass::Over,
        };
        passes.push((pass, take_number(chars, &mut i)?));
    }
    GaussCode::with_planar_signs(&passes)
}
