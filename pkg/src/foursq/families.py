"""Named catalog of conjectural constraint families, ready to scan.

Each family bundles one or more constraint specs (a family holds at n when
any of its specs has a witness), the smallest n the claim covers, an
optional exclusion template for n known to fall outside the claim, and any
counterexamples already certified below 10^5.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .constraint import parse_constraint


@dataclass(frozen=True)
class Family:
    name: str
    specs: Tuple[str, ...]
    lo: int = 0
    exclusions: Optional[str] = None
    known_cex: Tuple[int, ...] = ()
    note: str = ""

    def __post_init__(self):
        for text in self.specs:
            parse_constraint(text)


FAMILIES: Dict[str, Family] = {}


def _add(name: str, specs, lo: int = 0, exclusions: Optional[str] = None,
         known_cex: Tuple[int, ...] = (), note: str = "") -> None:
    if name in FAMILIES:
        raise ValueError(f"duplicate family name {name!r}")
    if isinstance(specs, str):
        specs = (specs,)
    FAMILIES[name] = Family(name, tuple(specs), lo, exclusions,
                            known_cex, note)


def get_family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise KeyError(f"unknown family {name!r}")


def list_families() -> List[str]:
    return sorted(FAMILIES)


# -- linear combinations of two coordinates -------------------------------

for a, b in [(1, 2), (1, 3), (1, 24)]:
    _add(f"square-sum-{a}x-{b}y", f"x + {b}y ~ square [N]")
for a, b in [(1, 1), (2, 1), (2, 2), (4, 3), (6, 2)]:
    _add(f"square-diff-{a}x-{b}y", f"{a}x - {b}y ~ square [N]")
_add("square-sum-x-7y", "x + 7y ~ square [N]", known_cex=(47,),
     note="47 is the only certified failure below 10^5")
_add("square-diff-3x-y", "3x - y ~ square [N]", lo=4)
_add("cube-diff-x-y", "x - y ~ cube [N]", exclusions="2^(6k+3)*7",
     note="the excluded geometric ray is conjecturally the entire "
          "failure set; 56 and 3584 are its certified members below 10^5")

# -- linear combinations of three coordinates -----------------------------

_add("square-135", "x + 3y + 5z ~ square [N]")
_add("twice-square-356", "3x + 5y + 6z ~ twice_square [N]", lo=16)
_add("cube-135", "x + 3y + 5z ~ cube [Z]")
for a, b, c in [(1, 1, 1), (2, 1, 1), (2, 1, 2), (3, 1, 2), (4, 1, 2)]:
    _add(f"square-{a}x-minus-{b}y-minus-{c}z",
         f"{a}x - {b}y - {c}z ~ square [N]")
for a, b, c in [
        (1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2), (1, 2, 3), (1, 3, 1),
        (1, 3, 3), (1, 4, 4), (1, 5, 1), (1, 6, 6), (1, 8, 6), (1, 12, 4),
        (1, 16, 1), (1, 17, 1), (1, 18, 1), (2, 2, 2), (2, 2, 4),
        (2, 3, 2), (2, 3, 3), (2, 4, 1), (2, 4, 2), (2, 6, 1), (2, 6, 2),
        (2, 6, 6), (2, 7, 4), (2, 7, 7), (2, 8, 2), (2, 9, 2), (2, 32, 2),
        (3, 3, 3), (3, 4, 2), (3, 4, 3), (3, 8, 3), (4, 5, 4), (4, 8, 3),
        (4, 9, 4), (4, 14, 14), (5, 8, 5), (6, 8, 6), (6, 10, 8),
        (7, 9, 7), (7, 18, 7), (7, 18, 12), (8, 9, 8), (8, 14, 14),
        (8, 18, 8), (14, 32, 14), (16, 18, 16), (30, 32, 30),
        (31, 32, 31), (48, 49, 48), (48, 121, 48)]:
    _add(f"square-{a}x-{b}y-minus-{c}z", f"{a}x + {b}y - {c}z ~ square [N]")

# -- linear combinations of four coordinates ------------------------------

for c in (1, 2, 4):
    _add(f"nonneg-cube-scale{c}-2y-z-w",
         f"2y + z - w ~ {c}*nonneg_cube [N; z <= w]" if c > 1
         else "2y + z - w ~ nonneg_cube [N; z <= w]")
_add("twice-nonneg-cube-xy2z4w",
     "x + y + 2z - 4w ~ 2*nonneg_cube [x in Z; y,z,w in N]")
_add("square-w2x3y5z", "x + 2y + 3z + 5w ~ square [N]",
     exclusions="4^(2k+1)*7")
for a, b, c, d in [(1, 1, 2, 1), (1, 2, 3, 1), (1, 2, 3, 3), (1, 2, 4, 2),
                   (1, 2, 4, 4), (1, 2, 5, 5), (1, 2, 6, 2), (1, 2, 8, 1),
                   (2, 2, 4, 4), (2, 4, 6, 4), (2, 4, 6, 6), (2, 4, 8, 2)]:
    _add(f"square-{a}x-{b}y-{c}z-minus-{d}w",
         f"{a}x + {b}y + {c}z - {d}w ~ square [N]")
for a, b, c, d in [(1, 1, 1, 3), (1, 1, 2, 2), (1, 1, 2, 4), (1, 1, 3, 3),
                   (8, 2, 6, 8), (8, 4, 4, 8), (8, 4, 8, 12)]:
    _add(f"nonneg-cube-{a}x-{b}y-{c}z-{d}w",
         f"{a}x + {b}y + {c}z + {d}w ~ nonneg_cube "
         "[x in Z+; y,z,w in Z]", lo=1)
for a, b, c, d in [(1, 2, 1, 1), (1, 2, 1, 2), (1, 3, 1, 2), (1, 4, 1, 3),
                   (2, 4, 1, 2), (2, 4, 2, 4), (8, 16, 7, 8),
                   (9, 11, 2, 9), (9, 16, 2, 7)]:
    _add(f"square-{a}x-{b}y-minus-{c}z-{d}w",
         f"{a}x + {b}y - {c}z - {d}w ~ square [N]")

# -- bilinear products ----------------------------------------------------

for k in (1, 2, 3):
    _add(f"square-prod-x-{k}y-z",
         f"(x + {k}y)*z ~ square [x,y,w in N; z in Z+]" if k > 1
         else "(x + y)*z ~ square [x,y,w in N; z in Z+]", lo=1)
for a, b in [(1, 2), (2, 2), (3, 2), (3, 3), (4, 2), (6, 6)]:
    _add(f"square-prod-{a}x-minus-{b}y-z",
         f"({a}x - {b}y)*z ~ square [x,y,w in N; z in Z+]", lo=1)
for a, b, c in [(1, 2, 3), (1, 3, 6), (1, 6, 9), (5, 6, 9), (18, 30, 114)]:
    _add(f"square-w-times-{a}x-{b}y-{c}z",
         f"({a}x + {b}y + {c}z)*w ~ square [N]")
_add("square-wx-2xy-2yz",
     ["x*w + 2x*y + 2y*z ~ square [x,y,z in N; w in Z+]",
      "2x*w + x*y + 4y*z ~ square [x,y,z in N; w in Z+]"], lo=1,
     note="either of the two bilinear forms may carry the witness")
_add("square-2xy-yz-zw-wx",
     "2x*y + y*z - z*w - x*w ~ square [x,y,z in N; w in Z+; x <= y]", lo=1)
_add("square-w2-4xy-8yz-32zx",
     "w^2 + 4x*y + 8y*z + 32z*x ~ square [x,y,z in N; w in Z+]", lo=1)
for k in (1, 2, 8, 16, 48, 336):
    _add(f"square-w2-{k}xy-yz",
         f"w^2 + {k}*(x*y + y*z) ~ square [x,y,z in N; w in Z+]", lo=1)
for a, b, c in [(1, 2, 3), (1, 3, 8), (1, 8, 13), (2, 4, 45), (4, 5, 7),
                (4, 7, 23), (5, 8, 9), (11, 16, 31)]:
    _add(f"square-{a}xy-{b}yz-{c}zx",
         f"{a}x*y + {b}y*z + {c}z*x ~ square [N]")
_add("twice-square-bilinear-mix",
     ["x*w + x*y + 2y*z + 3z*x ~ twice_square [x,y,z in N; w in Z+]",
      "x*w + 3x*y + 8y*z + 5z*x ~ twice_square [x,y,z in N; w in Z+]"],
     lo=1)
_add("thrice-square-6wx-2xy-3yz-4zx",
     "6x*w + 2x*y + 3y*z + 4z*x ~ 3*square [x,y,z in N; w in Z+]", lo=1)
_add("square-xy-pm-2zw",
     ["x*y + 2z*w ~ square [N]", "x*y - 2z*w ~ square [N]"])
_add("square-xy-pm-half-zw",
     ["x*y + z*w/2 ~ square [N; max(x,y) >= min(z,w)]",
      "x*y - z*w/2 ~ square [N; max(x,y) >= min(z,w)]"])
_add("power4-xy-yz-zw",
     "x*y + y*z + z*w ~ power4 [x in Z+; y in N; z,w in Z]", lo=1)
_add("power5-xy-yz-2zw-2wx",
     "x*y + y*z + 2z*w + 2x*w ~ power5 [x,y,z in Z; w in Z+]", lo=1)

# -- ternary quadratic values ---------------------------------------------

for a, b, c in [(1, 8, 16), (4, 21, 24), (5, 40, 4), (9, 63, 7),
                (16, 80, 25), (36, 45, 40), (40, 72, 9)]:
    _add(f"square-quad-{a}x2-{b}y2-{c}z2-ordered",
         f"{a}x^2 + {b}y^2 + {c}z^2 ~ square [N; x >= y]")
for a, b, c in [(1, 3, 12), (1, 3, 18), (1, 3, 21), (1, 3, 60), (1, 5, 15),
                (1, 8, 24), (1, 12, 15), (1, 24, 56), (3, 4, 9),
                (3, 9, 13), (4, 5, 12), (4, 5, 60), (4, 9, 60),
                (4, 12, 21), (4, 12, 45), (5, 36, 40)]:
    _add(f"square-quad-{a}x2-{b}y2-{c}z2",
         f"{a}x^2 + {b}y^2 + {c}z^2 ~ square [N]")
for a, b, c in [(21, 5, 15), (36, 3, 8), (48, 8, 39), (64, 7, 8),
                (40, 15, 144), (45, 20, 144), (69, 20, 60)]:
    _add(f"square-quad-{a}x2-minus-{b}y2-{c}z2",
         f"{a}x^2 - {b}y^2 - {c}z^2 ~ square [N]")

# -- right-triangle legs and related quadratics ---------------------------

_add("square-hyp-10w5x-12y36z",
     "(10w + 5x)^2 + (12y + 36z)^2 ~ square [x,y,z in N; w in Z+]", lo=1)
_add("square-hyp-xy-4z", "(x + y)^2 + (4z)^2 ~ square [N; y > z]", lo=1)
_add("legs-8x12y-15z", "legs(8x + 12y, 15z) [N]", lo=6)
_add("square-hyp-xyz-4xy4z",
     "(x + y + z)^2 + (4x + 4y - 4z)^2 ~ square [N; x + y >= z]")
_add("legs-x8y8z15w-6sum",
     "legs(x + 8y + 8z + 15w, 6x + 6y + 6z + 6w) [N; y < z]", lo=1)
_add("square-hyp-x3y6z17w",
     "(x + 3y + 6z + 17w)^2 + (20x + 4y + 8z + 4w)^2 ~ square [N]")
_add("square-hyp-x3y9z17w",
     "(x + 3y + 9z + 17w)^2 + (20x + 4y + 12z + 4w)^2 ~ square [N]")
_add("square-hyp-x3y11z15w",
     "(x + 3y + 11z + 15w)^2 + (12x + 4y + 4z + 20w)^2 ~ square [N]")
_add("square-hyp-3sum-4mix-a",
     "(3x + 6y + 9z + 12w)^2 + (4x + 16y + 12z + 8w)^2 ~ square [N]")
_add("square-hyp-3sum-4mix-b",
     "(3x + 6y + 9z + 12w)^2 + (4x + 20y + 12z + 4w)^2 ~ square [N]")

# -- quadratics with one product term -------------------------------------

for k in (12, 24, 32, 48, 84, 120, 252):
    _add(f"square-x2-{k}yz", f"x^2 + {k}y*z ~ square [N]")
_add("square-9x2-minus-4yz", "9x^2 - 4y*z ~ square [N]")
_add("square-9x2-140yz", "9x^2 + 140y*z ~ square [N]")
_add("square-25x2-24yz", "25x^2 + 24y*z ~ square [N]")
_add("square-121x2-minus-20yz", "121x^2 - 20y*z ~ square [N]")
_add("square-4x2-5y2-20zw",
     "4x^2 + 5y^2 + 20z*w ~ square [N; z < w]", lo=1)
_add("square-x2-8y2-8zw", "x^2 + 8y^2 + 8z*w ~ square [N]")
_add("square-3x5y-sq-minus-24zw", "(3x + 5y)^2 - 24z*w ~ square [N]")
_add("square-x-minus-2y-sq-24zw", "(x - 2y)^2 + 24z*w ~ square [N]")
_add("square-x-minus-3y-sq-16zw", "(x - 3y)^2 + 16z*w ~ square [N]")
_add("square-x2-3y2-4z2-symsq",
     "x^2 + 3y^2 + 4z^2 + (x + y + z)^2 ~ square [N]")
_add("square-x2-3y2-5z2-minus-8w2",
     "x^2 + 3y^2 + 5z^2 - 8w^2 ~ square [N]")
_add("square-x-minus-2y-sq-8z2-16w2",
     "(x - 2y)^2 + 8z^2 + 16w^2 ~ square [N]")
_add("square-4-x-minus-3y-sq-9z2-12w2",
     "4*(x - 3y)^2 + 9z^2 + 12w^2 ~ square [N]")
_add("square-x-plus-2y-sq-8z2-40w2",
     "(x + 2y)^2 + 8z^2 + 40w^2 ~ square [N]")
_add("square-9-x-plus-2y-sq-16z2-24w2",
     "9*(x + 2y)^2 + 16z^2 + 24w^2 ~ square [N]")
for a, b, c, d in [(3, 9, 3, 20), (5, 9, 5, 20), (5, 25, 4, 5),
                   (9, 81, 9, 20), (12, 16, 3, 12), (16, 64, 15, 16),
                   (20, 25, 4, 20), (27, 81, 20, 27), (30, 64, 15, 30),
                   (32, 64, 15, 32), (48, 64, 15, 48)]:
    _add(f"square-quad-{a}x2-{b}y2-minus-{c}z2-{d}w2",
         f"{a}x^2 + {b}y^2 - {c}z^2 - {d}w^2 ~ square [N]")

# -- cubic and quartic forms ----------------------------------------------

_add("square-w-x2-8y2-minus-z2", "(x^2 + 8y^2 - z^2)*w ~ square [N]")
for a, b in [(3, 13), (5, 11), (15, 57), (15, 165), (138, 150)]:
    _add(f"square-{a}x2-{b}y2-times-z",
         f"({a}x^2 + {b}y^2)*z ~ square [N]")
_add("square-cubic-mix",
     ["36x^2y + 12y^2z + z^2x ~ square [x,y,z in N; w in Z+]",
      "x^3 + 4y*z*(y - z) ~ square [x,y,z in N; w in Z+]",
      "x^3 + 8y*z*(2y - z) ~ square [x,y,z in N; w in Z+]"], lo=1)
for a, b in [(1, 1), (1, 15), (1, 20), (1, 36), (1, 60), (1, 1680),
             (9, 260)]:
    _add(f"square-{a}x4-{b}y3z",
         f"{a}x^4 + {b}y^3z ~ square [N]" if a > 1
         else f"x^4 + {b}y^3z ~ square [N]")
for a, b, c in [(1, 20, 60), (1, 24, 56), (9, 20, 60), (9, 32, 96)]:
    _add(f"square-{a}x4-{b}y3z-{c}yz3",
         f"{a}x^4 + {b}y^3z + {c}yz^3 ~ square [x,y,z in N; w in Z+]"
         if a > 1 else
         f"x^4 + {b}y^3z + {c}yz^3 ~ square [x,y,z in N; w in Z+]",
         lo=1)
_add("square-w2x2-3x2y2-2y2z2", "w^2x^2 + 3x^2y^2 + 2y^2z^2 ~ square [N]")
_add("square-w2x2-5x2y2-80y2z2-20z2w2",
     "w^2x^2 + 5x^2y^2 + 80y^2z^2 + 20z^2w^2 ~ square "
     "[x,y,z in N; w in Z+]", lo=1)
_add("square-xyz-lin", "x*y*z*(x + 9y + 11z + 10w) ~ square [N]")
_add("square-xyz-3y13z",
     "x*y*z*(x + 3y + 13z) ~ square [y,z,w in N; x in Z+; y >= z]", lo=1)
_add("square-xy-3x5y2z3w",
     "x*y*(3x + 5y + 2z + 3w) ~ square [N; w >= 1]", lo=1)
for a, b, c in [(1, 8, 20), (3, 5, 15), (6, 14, 4), (7, 9, 5), (7, 29, 5),
                (18, 38, 18), (39, 81, 51)]:
    _add(f"square-xy-{a}x2-{b}y2-{c}z2",
         f"x*y*({a}x^2 + {b}y^2 + {c}z^2) ~ square [N]")
for a, b, c in [(1, 2, 4), (1, 2, 9), (1, 3, 4), (2, 3, 4), (2, 4, 6),
                (4, 8, 10)]:
    _add(f"square-w-25w-24-{a}x-{b}y-{c}z",
         f"w*(25w + 24*({a}x + {b}y + {c}z)) ~ square "
         "[x,y,z in N; w in Z+]", lo=1)
_add("square-3x2y-z2w",
     "3x^2y + z^2w ~ square [x,y,z in N; w in Z; x >= z]")
for a, b in [(7, 1), (8, 1), (9, 2)]:
    _add(f"square-{a}x2y-{b}z2w",
         f"{a}x^2y + {b}z^2w ~ square [x,y,z in N; w in Z]"
         if b > 1 else f"{a}x^2y + z^2w ~ square [x,y,z in N; w in Z]")
