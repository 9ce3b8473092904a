"""A corpus whose labels are decided by two planted variable names each.

Label L is predicted iff both of its signature variables appear. Each is
declared exactly once, either as a leading parameter or as a top-level
local, and never used, so the only thing a reducer can keep of it is the
declaration itself: its type and its name.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Set

SIGNATURES = {
    "area": ("width", "height"),
    "distance": ("origin", "target"),
    "merge": ("left", "right"),
    "parse": ("input", "cursor"),
    "render": ("canvas", "style"),
}
RETURN_TYPES = ["void", "void", "int", "String", "boolean"]
DECL_TYPES = ["int", "int", "String", "long", "double", "boolean", "Object"]
FILLER_NAMES = ["count", "total", "tmp", "idx", "buf", "flag", "acc"]
PER_LABEL = 10


@dataclass
class Planted:
    program_id: str
    label: str
    text: str
    forced: Set[str]  # tokens any grammar-respecting reducer must keep
    signature_vars: List[str]
    other_vars: List[str]


def _filler(rng: random.Random, names: List[str]) -> List[str]:
    stmts = []
    for name in names:
        stmts.append(f"int {name} = {rng.randint(0, 9)} ;")
    pool = [
        "{a} = {a} + {b} ;",
        "if ( {a} > {b} ) {{ {a} -- ; }} else {{ {b} ++ ; }}",
        "while ( {a} < 10 ) {{ {a} += 2 ; }}",
        'System . out . println ( "{a}" + {b} ) ;',
        "for ( int i = 0 ; i < {a} ; i ++ ) {{ {b} = {b} * i ; }}",
    ]
    for _ in range(rng.randint(1, 4)):
        a, b = rng.choice(names), rng.choice(names)
        stmts.append(rng.choice(pool).format(a=a, b=b))
    return stmts


def generate(seed: int = 7) -> List[Planted]:
    rng = random.Random(seed)
    out = []
    for label, (alpha, beta) in SIGNATURES.items():
        for k in range(PER_LABEL):
            rt = rng.choice(RETURN_TYPES)
            ta, tb = rng.choice(DECL_TYPES), rng.choice(DECL_TYPES)
            others = rng.sample(FILLER_NAMES, rng.randint(1, 3))
            extra_params = [f"{rng.choice(DECL_TYPES)} p{i}" for i in range(rng.randint(0, 2))]
            layout = k % 3  # 0: both params, 1: alpha param, 2: both locals
            params, locals_ = [], []
            if layout == 0:
                params += [f"{ta} {alpha}", f"{tb} {beta}"]
            elif layout == 1:
                params.append(f"{ta} {alpha}")
                locals_.append(f"{tb} {beta} = {rng.randint(0, 9)} ;" if tb != "String" else f'{tb} {beta} = "s" ;')
            else:
                locals_ += [f"{ta} {alpha} ;", f"{tb} {beta} ;"]
            params += extra_params
            body = _filler(rng, others)
            for decl in locals_:
                body.insert(rng.randint(0, len(body)), decl)
            if rt != "void":
                body.append(f"return {'null' if rt == 'String' else ('true' if rt == 'boolean' else others[0])} ;")
            mods = rng.choice(["", "public ", "private static ", "@Override public "])
            text = f"{mods}{rt} f ( {' , '.join(params)} ) {{\n    " + "\n    ".join(body) + "\n}\n"
            out.append(
                Planted(
                    program_id=f"{label}_{k:02d}",
                    label=label,
                    text=text,
                    forced={rt, "f", alpha, beta, ta, tb},
                    signature_vars=[alpha, beta],
                    other_vars=[p.split()[1] for p in extra_params] + others + (["i"] if "for (" in text else []),
                )
            )
    return out


def write_corpus(directory: Path, programs: List[Planted]) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    rows = ["path\tlabel\tinput_type"]
    for p in programs:
        (directory / f"{p.program_id}.java").write_text(p.text)
        rows.append(f"{p.program_id}.java\t{p.label}\tplanted")
    (directory / "corpus.tsv").write_text("\n".join(rows) + "\n")
    return directory


def write_model(path: Path) -> Path:
    path.write_text("".join(f"{label} = {a},{b}\n" for label, (a, b) in SIGNATURES.items()))
    return path


def expected_key(programs: List[Planted], label: str, threshold: float = 0.5) -> Set[str]:
    """Key features computed from generator metadata, no reducer involved."""
    mine = [p for p in programs if p.label == label]
    counts: Dict[str, int] = {}
    for p in mine:
        for tok in p.forced:
            counts[tok] = counts.get(tok, 0) + 1
    needed = math.ceil(threshold * len(mine))
    return {t for t, c in counts.items() if c >= needed}
