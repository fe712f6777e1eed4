import json
from itertools import permutations

import numpy as np
import pytest

from laguerre_dd.base_blocks import CaseSpec, base_block_for
from laguerre_dd.finite_field import make_field
from laguerre_dd.orbit_design import (
    DivisibleDesign,
    PermutationAction,
    build_design,
    derive_lower_t,
    design_parameters,
    direct_stabilizer_count,
    orbit_of_block,
    stabilizer_order,
)
from laguerre_dd.verify import verify_design


def s3_action():
    return PermutationAction(list(permutations(range(3))))


def test_toy_orbit_under_symmetric_group():
    orbit = orbit_of_block(s3_action(), (0, 1))
    assert orbit.tolist() == [[0, 1], [0, 2], [1, 2]]


def test_toy_orbit_under_trivial_group():
    orbit = orbit_of_block(PermutationAction([(0, 1, 2, 3)]), (1, 3))
    assert orbit.tolist() == [[1, 3]]


def test_toy_stabilizer_orders():
    g = s3_action()
    assert stabilizer_order(g, (0, 1)) == 2
    assert direct_stabilizer_count(g, (0, 1)) == 2


def test_toy_design_parameters():
    # S3 on 3 singleton classes: the orbit of a pair is the trivial 2-(1,2,1) design
    params = design_parameters(v=3, s=1, k=2, t=2, group_order=6, stabilizer_order=2)
    assert (params.b, params.lambda_t) == (3, 1)


def test_design_parameters_laguerre_cases():
    # q=4, case i with i=1: stabilizer 6
    p = design_parameters(20, 4, 3, 3, 3840, 6)
    assert (p.lambda_t, p.b) == (1, 640)
    # q=4, case ii with i=2: stabilizer 12
    p = design_parameters(20, 4, 4, 3, 3840, 12)
    assert (p.lambda_t, p.b) == (2, 320)
    # short case-v block with equianharmonic stabilizer 12
    p = design_parameters(56, 7, 4, 3, 115248, 12)
    assert p.lambda_t == 2


def test_design_parameters_integrality_errors():
    with pytest.raises(ValueError):
        design_parameters(3, 1, 2, 2, 6, 4)  # b = 6/4
    with pytest.raises(ValueError):
        design_parameters(20, 4, 3, 3, 3840, 7)


def test_derive_lower_t_closed_forms():
    # case i: lambda_2 = q(q-1)/(p^i-1)
    for (q, m, go, so) in [(4, 2, 3840, 6), (9, 3, 524880, 24), (8, 8, 258048, 504)]:
        params = design_parameters(q * q + q, q, m + 1, 3, go, so)
        lower = derive_lower_t(params)
        assert lower.t == 2
        assert lower.lambda_t == q * (q - 1) // (m - 1)
    # case ii: lambda_2 = q(q-1)
    params = design_parameters(20, 4, 4, 3, 3840, 12)
    assert derive_lower_t(params).lambda_t == 12
    # case iii at q=8, i=3: lambda_2 = (1/2)(m-2)q(q-1) = 168
    params = design_parameters(72, 8, 7, 3, 258048, 14)
    assert params.lambda_t == 15
    assert derive_lower_t(params).lambda_t == 168
    # case iv at q=8, i=3: lambda_2 = (1/6)(m-2)(m-3)q(q-1) = 280
    params = design_parameters(72, 8, 6, 3, 258048, 6)
    assert params.lambda_t == 20
    assert derive_lower_t(params).lambda_t == 280


def test_derive_lower_t_rejects_nonintegral():
    params = design_parameters(9, 1, 6, 3, 9 * 8 * 7 * 2, 2)
    # lambda_2 = lambda_t * (9 - 3 + 1) / 4 = 7/4 * lambda_t; pick lambda_t = 1
    bad = params.__class__(**{**params.__dict__, "lambda_t": 1})
    with pytest.raises(ValueError):
        derive_lower_t(bad)


def test_derive_lower_t_requires_t_at_least_two():
    params = design_parameters(3, 1, 2, 2, 6, 2)
    with pytest.raises(ValueError):
        derive_lower_t(derive_lower_t(params))


def test_build_design_q3_full_line(gamma3):
    f = make_field(3, 1)
    base = base_block_for(f, CaseSpec("i", 1))
    design = build_design(f, base, 3, group=gamma3, case="i", i=1)
    p = design.params
    assert (p.v, p.k, p.lambda_t, p.b) == (12, 4, 1, 27)
    assert p.stabilizer_order == 24
    # every orbit block is transversal
    classes = design.point_classes[design.blocks]
    assert (np.diff(np.sort(classes, axis=1), axis=1) != 0).all()


def test_build_design_rejects_nontransversal_base():
    f = make_field(3, 1)
    with pytest.raises(ValueError):
        build_design(f, (0, 1, 9), 3)  # 0 and 1 share a class


def test_orbit_stabilizer_consistency_q4(gamma4, gf4):
    base = base_block_for(gf4, CaseSpec("i", 1))
    orbit = orbit_of_block(gamma4, base)
    direct = direct_stabilizer_count(gamma4, base)
    assert len(orbit) == 640
    assert direct == 6
    assert len(orbit) * direct == len(gamma4)
    assert stabilizer_order(gamma4, base) == direct


def test_blocks_sorted_lexicographically(gamma3):
    f = make_field(3, 1)
    design = build_design(f, base_block_for(f, CaseSpec("i", 1)), 3, group=gamma3)
    rows = design.blocks.tolist()
    assert rows == sorted(rows)
    assert all(row == sorted(row) for row in rows)


def test_document_roundtrip_and_byte_stability(gamma3):
    f = make_field(3, 1)
    design = build_design(
        f, base_block_for(f, CaseSpec("i", 1)), 3, group=gamma3, case="i", i=1
    )
    js = design.to_json()
    assert js == design.to_json()
    doc = json.loads(js)
    assert doc["field"] == {"p": 3, "n": 1}
    assert doc["params"] == {"t": 3, "s": 3, "k": 4, "lambda": 1, "v": 12, "b": 27}
    assert doc["points"][0] == {"id": 0, "class": 0, "repr": {"kind": "proper", "rep": 0}}
    loaded = DivisibleDesign.from_document(doc)
    assert verify_design(loaded, 3).passed
    assert np.array_equal(loaded.blocks, design.blocks)


def test_parameter_integrality_across_all_cases_up_to_q11():
    # closed-form stabilizer orders; every admissible (q, i, case, variant,
    # choice) must give integral b, lambda_3 and lambda_2
    from laguerre_dd.base_blocks import (
        VARIANTS,
        _condition,
        case_block_size,
        case_stabilizer_order,
    )
    from laguerre_dd.projectivities import group_order
    from laguerre_dd.selfcheck import prime_powers_upto

    checked = 0
    for q, p, n in prime_powers_upto(11):
        for i in range(1, n + 1):
            if n % i:
                continue
            m = p**i
            entries = [("i", None, "long"), ("ii", None, "long"), ("iii", None, "long"), ("iv", None, "long")]
            for variant in VARIANTS:
                entries += [("v", variant, "long"), ("v", variant, "short")]
            for case, variant, choice in entries:
                if _condition(case, variant, p, m) is not None:
                    continue
                k = case_block_size(case, m, choice)
                stab = case_stabilizer_order(case, m, variant)
                params = design_parameters(q * q + q, q, k, 3, group_order(q), stab)
                derive_lower_t(params)  # must not raise either
                checked += 1
    assert checked >= 30


def test_orbit_of_block_rejects_nontransversal_base(gamma3):
    with pytest.raises(ValueError):
        orbit_of_block(gamma3, (0, 1, 9))


def test_from_document_rejects_malformed():
    with pytest.raises(ValueError):
        DivisibleDesign.from_document({"field": {"p": 3}})
    with pytest.raises(ValueError):
        DivisibleDesign.from_document(
            {
                "field": {"p": 3, "n": 1},
                "params": {"t": 3, "s": 3, "k": 4, "lambda": 1, "v": 12, "b": 27},
                "points": [{"id": 0, "class": 0}],
                "blocks": [[0, 1], [0]],
            }
        )
