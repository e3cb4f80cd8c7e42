//! Nondeterministic Turing machines as Wang tile sets, and the regular
//! language of tiling instances built from them.
//!
//! The south edges of a row carry one configuration and its north edges the
//! next. Horizontal colors are tape symbols and head cells `q:c`; vertical
//! colors are states (a head moving sideways) or the neutral white `<>`.

use super::{GeneratedLanguage, ReductionError};
use crate::automata::{Alphabet, RegexNode};
use crate::problems::{
    Move, Tile, TileSet, TilingInstance, TilingVariant, TmSpec, TmTransition, COLOR_SEPARATOR,
    ENTRY_SEPARATOR, TILE_SEPARATOR,
};

pub const WHITE_COLOR: &str = "<>";

/// A machine with a single accepting configuration: blank tape, head on the
/// first cell, state `final_state`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedMachine {
    pub machine: TmSpec,
    /// Walks right over the used part of the tape.
    pub sweep: usize,
    /// Walks back left, blanking every cell.
    pub home: usize,
    pub final_state: usize,
}

/// Adds the cleanup phase after acceptance. From the old accepting state the
/// machine enters `sweep`, which may move right any number of times before
/// switching to `home`; `home` blanks cells while moving left and may enter
/// the final state on any cell. Only runs that end on the first cell with a
/// blank tape reach the distinguished configuration.
pub fn normalize_tm(tm: &TmSpec) -> NormalizedMachine {
    let q = tm.state_count();
    let (sweep, home, final_state) = (q, q + 1, q + 2);
    let blank = tm.blank();
    let mut delta = tm.transitions().to_vec();
    let rule = |from, read, to, write, dir| TmTransition {
        from,
        read,
        to,
        write,
        dir,
    };
    for &c in tm.tape_alphabet() {
        delta.push(rule(tm.accept(), c, sweep, c, Move::S));
        delta.push(rule(sweep, c, sweep, c, Move::R));
        delta.push(rule(sweep, c, home, c, Move::S));
        delta.push(rule(home, c, home, blank, Move::L));
        delta.push(rule(home, c, final_state, blank, Move::S));
    }
    let machine = TmSpec::new(
        q + 3,
        tm.input_alphabet().to_vec(),
        tm.tape_alphabet().to_vec(),
        blank,
        tm.start(),
        final_state,
        delta,
    )
    .expect("normalization keeps the machine valid");
    NormalizedMachine {
        machine,
        sweep,
        home,
        final_state,
    }
}

struct Palette {
    symbols: usize,
}

impl Palette {
    fn white(&self) -> usize {
        0
    }

    fn symbol(&self, s: usize) -> usize {
        1 + s
    }

    fn state(&self, q: usize) -> usize {
        1 + self.symbols + q
    }

    fn head(&self, states: usize, q: usize, s: usize) -> usize {
        1 + self.symbols + states + q * self.symbols + s
    }
}

fn check_symbols(tm: &TmSpec) -> Result<(), ReductionError> {
    let reserved = [TILE_SEPARATOR, COLOR_SEPARATOR, ENTRY_SEPARATOR, '$'];
    match tm.tape_alphabet().iter().find(|c| reserved.contains(c)) {
        Some(c) => Err(ReductionError::Invalid(format!(
            "tape symbol {c:?} is reserved by the tiling encoding"
        ))),
        None => Ok(()),
    }
}

/// Tile set of the normalized machine, in emission order: one copy tile per
/// tape symbol; per transition an action tile, plus one reception tile per
/// tape symbol for sideways moves; finally the tile repeating the accepting
/// configuration. Colors are named `<>`, the tape symbols, `q<i>` and
/// `q<i>:<c>`.
pub fn reduce_ntm_to_tiles(tm: &TmSpec) -> Result<TileSet, ReductionError> {
    check_symbols(tm)?;
    let n = normalize_tm(tm);
    let m = &n.machine;
    let gamma = m.tape_alphabet();
    let states = m.state_count();
    let p = Palette { symbols: gamma.len() };

    let mut colors = vec![WHITE_COLOR.to_string()];
    colors.extend(gamma.iter().map(|c| c.to_string()));
    colors.extend((0..states).map(|q| format!("q{q}")));
    for q in 0..states {
        colors.extend(gamma.iter().map(|c| format!("q{q}:{c}")));
    }

    let sym = |c: char| gamma.iter().position(|&x| x == c).expect("tape symbol");
    let white = p.white();
    let mut tiles = Vec::new();
    for s in 0..gamma.len() {
        let c = p.symbol(s);
        tiles.push(Tile { w: white, n: c, e: white, s: c });
    }
    for t in m.transitions() {
        let below = p.head(states, t.from, sym(t.read));
        let written = sym(t.write);
        match t.dir {
            Move::R => {
                tiles.push(Tile { w: white, n: p.symbol(written), e: p.state(t.to), s: below });
                for c in 0..gamma.len() {
                    tiles.push(Tile {
                        w: p.state(t.to),
                        n: p.head(states, t.to, c),
                        e: white,
                        s: p.symbol(c),
                    });
                }
            }
            Move::L => {
                tiles.push(Tile { w: p.state(t.to), n: p.symbol(written), e: white, s: below });
                for c in 0..gamma.len() {
                    tiles.push(Tile {
                        w: white,
                        n: p.head(states, t.to, c),
                        e: p.state(t.to),
                        s: p.symbol(c),
                    });
                }
            }
            Move::S => {
                tiles.push(Tile { w: white, n: p.head(states, t.to, written), e: white, s: below });
            }
        }
    }
    let accepting = p.head(states, n.final_state, sym(m.blank()));
    tiles.push(Tile { w: white, n: accepting, e: white, s: accepting });

    Ok(TileSet::new(colors, tiles)?.with_distinguished(
        Some(white),
        Some(p.symbol(sym(m.blank()))),
        Some(accepting),
    )?)
}

/// The instance of width `width` whose bottom edge holds the initial
/// configuration on `input` and whose top edge holds the accepting one.
/// Bounded instances get white side borders.
pub fn tiling_instance_for_input(
    tm: &TmSpec,
    input: &str,
    width: usize,
    variant: TilingVariant,
) -> Result<TilingInstance, ReductionError> {
    let tiles = reduce_ntm_to_tiles(tm)?;
    let len = input.chars().count();
    if width == 0 || len > width {
        return Err(ReductionError::Invalid(format!(
            "input of length {len} does not fit width {width}"
        )));
    }
    if let Some(c) = input.chars().find(|c| !tm.input_alphabet().contains(c)) {
        return Err(ReductionError::Invalid(format!("{c:?} is not an input symbol")));
    }
    let id = |name: String| tiles.color_id(&name).expect("generated color");
    let blank = tiles.blank().expect("generated blank");
    let start = tm.start();
    let mut bottom: Vec<usize> = input.chars().map(|c| id(c.to_string())).collect();
    bottom.resize(width, blank);
    let first = input.chars().next().unwrap_or(tm.blank());
    bottom[0] = id(format!("q{start}:{first}"));
    let mut top = vec![blank; width];
    top[0] = tiles.accept().expect("generated accept color");
    let white = tiles.white().expect("generated white");
    Ok(match variant {
        TilingVariant::Bounded => TilingInstance::bounded(tiles, vec![white; width], top, vec![white; width], bottom)?,
        TilingVariant::Corridor => TilingInstance::corridor(tiles, top, bottom)?,
    })
}

/// `⟨T⟩ $ W $ F $ W $ B` (bounded) or `⟨T⟩ $ F $ B` (corridor), where `W` is a
/// possibly empty run of white entries, `F` is the accepting head cell
/// followed by blanks, and `B` is an initial configuration: the head on the
/// first input symbol (or on a blank for the empty input) followed by the
/// rest of the input and blanks. Entries are separated by `#`.
pub fn reduce_ntm_to_tiling_lang(tm: &TmSpec, variant: TilingVariant) -> Result<GeneratedLanguage, ReductionError> {
    let tiles = reduce_ntm_to_tiles(tm)?;
    let lit = RegexNode::Literal;
    let entry = |name: &str| RegexNode::word(name);
    let more = |inner: RegexNode| RegexNode::star(RegexNode::concat(lit(ENTRY_SEPARATOR), inner));
    let name = |id: Option<usize>| tiles.color_name(id.expect("generated color")).to_string();
    let blank = name(tiles.blank());
    let white = name(tiles.white());

    let whites = RegexNode::alternation(
        RegexNode::Epsilon,
        RegexNode::concat(entry(&white), more(entry(&white))),
    );
    let accepting = RegexNode::concat(entry(&name(tiles.accept())), more(entry(&blank)));
    let start = tm.start();
    let symbols = || RegexNode::alternation_all(tm.input_alphabet().iter().map(|c| entry(&c.to_string())));
    let heads = tm
        .input_alphabet()
        .iter()
        .map(|c| entry(&format!("q{start}:{c}")));
    let initial = RegexNode::alternation(
        RegexNode::concat(RegexNode::alternation_all(heads), more(symbols())),
        entry(&format!("q{start}:{blank}")),
    );
    let bottom = RegexNode::concat(initial, more(entry(&blank)));

    let sep = || lit('$');
    let mut parts = vec![RegexNode::word(&tiles.serialize()), sep()];
    match variant {
        TilingVariant::Bounded => parts.extend([whites.clone(), sep(), accepting, sep(), whites, sep(), bottom]),
        TilingVariant::Corridor => parts.extend([accepting, sep(), bottom]),
    }
    let provenance = match variant {
        TilingVariant::Bounded => "ntm-to-tiling-lang (bounded)",
        TilingVariant::Corridor => "ntm-to-tiling-lang (corridor)",
    };
    GeneratedLanguage::from_node(RegexNode::concat_all(parts), &Alphabet::default(), provenance)
}
