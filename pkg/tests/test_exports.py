import json
from fractions import Fraction
import fastcore.test as fct

from cjm_sign_posets.core.exports import (OutputFormat, fraction_str, poset_to_dict, poset_to_json, poset_to_dot,
                                          poset_to_text, poset_to_csv, render_poset, rows_to_csv, rows_to_text)

R31_DOT = """digraph "R_3_1" {
  rankdir=BT;
  node [shape=plaintext];
  n0 [label="++-"];
  n1 [label="+--"];
  n2 [label="+-0"];
  n3 [label="+0-"];
  n4 [label="0+-"];
  { rank=same; n2; n3; n4; }
  { rank=same; n0; n1; }
  n2 -> n1;
  n3 -> n0;
  n3 -> n1;
  n4 -> n0;
}
"""

R31_CSV = """index,element,rank,covered_by
0,++-,2,
1,+--,2,
2,+-0,1,1
3,+0-,1,0 1
4,0+-,1,0
"""

R31_TEXT = """R_{3,1}: 5 elements, 4 cover edges
rank 1: +-0 +0- 0+-
rank 2: ++- +--
+-0 < +--
+0- < ++-
+0- < +--
0+- < ++-
"""


def test_fraction_str():
    fct.test_eq(fraction_str(Fraction(3, 2)), "3/2")
    fct.test_eq(fraction_str(Fraction(4, 2)), "2/1")
    fct.test_eq(fraction_str(0), "0/1")


def test_json(r31):
    doc = json.loads(poset_to_json(r31))
    fct.test_eq(doc, {"family": "R", "n": 3, "l": 1,
                      "elements": ["++-", "+--", "+-0", "+0-", "0+-"],
                      "ranks": [2, 2, 1, 1, 1],
                      "covers": [[2, 1], [3, 0], [3, 1], [4, 0]]})
    assert poset_to_json(r31).endswith("}\n")
    fct.test_eq(poset_to_dict(r31)["covers"][0], [2, 1])


def test_dot_golden(r31):
    fct.test_eq(poset_to_dot(r31), R31_DOT)


def test_csv_golden(r31):
    fct.test_eq(poset_to_csv(r31), R31_CSV)


def test_text_golden(r31):
    fct.test_eq(poset_to_text(r31), R31_TEXT)


def test_render_dispatch(r31):
    fct.test_eq(render_poset(r31, OutputFormat.DOT), R31_DOT)
    fct.test_eq(render_poset(r31, "csv"), R31_CSV)
    fct.test_eq(render_poset(r31), poset_to_json(r31))


def test_bounded_labels(r31_hat):
    doc = json.loads(poset_to_json(r31_hat))
    fct.test_eq(doc["family"], "R-hat")
    fct.test_eq(doc["elements"][0], "0hat")
    fct.test_eq(doc["elements"][-1], "1hat")
    assert 'digraph "R-hat_3_1" {' in poset_to_dot(r31_hat)


def test_rows_to_csv_cells():
    out = rows_to_csv(["S", "value", "equal", "w"], [[(1, 3), 4, True, Fraction(3, 2)], [(), 1, False, 2]])
    fct.test_eq(out, "S,value,equal,w\n1 3,4,true,3/2\n,1,false,2\n")


def test_rows_to_text_alignment():
    fct.test_eq(rows_to_text(["a", "bb"], [[1, Fraction(3, 2)], [10, True]]), " a    bb\n 1   3/2\n10  true\n")
