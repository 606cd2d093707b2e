#!/usr/bin/env python3
"""Regenerate the bundled JSON fixtures in src/hopfcyc/fixtures/."""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from hopfcyc.cyclic import build_contra_algebra
from hopfcyc.examples import (
    divided_power_coalgebra,
    dual_numbers_algebra,
    ground_field_algebra,
    group_conjugation_algebra,
    group_left_coalgebra,
    permutation_algebra,
    skew_lines_algebra,
    twisted_dual_numbers_algebra,
    sign_character,
)
from hopfcyc.hopf import (
    cyclic_group_table,
    dual_group_algebra,
    group_algebra,
    sweedler,
    trivial,
)
from hopfcyc.rep import (
    ModComod,
    canonical_yd,
    conjugation_yd,
    grouplike_twisted_coefficient,
    regular_comodule,
    regular_module,
    trivial_modcomod,
)
from hopfcyc.linalg import Mat
from hopfcyc.serialize import (
    cyclic_object_to_dict,
    dumps_canonical,
    hopf_to_dict,
    modcomod_to_dict,
    module_algebra_to_dict,
    module_coalgebra_to_dict,
)

DEST = pathlib.Path(__file__).resolve().parents[1] / "src" / "hopfcyc" / "fixtures"


def write(name, payload):
    (DEST / name).write_text(dumps_canonical(payload))
    print(f"wrote {name}")


def main():
    triv = trivial()
    z2 = group_algebra(cyclic_group_table(2), names=["e", "g"])
    z3 = group_algebra(cyclic_group_table(3), names=["e", "g", "g2"])
    z4 = group_algebra(cyclic_group_table(4), names=["e", "g", "g2", "g3"])
    dz2 = dual_group_algebra(cyclic_group_table(2), names=["p_e", "p_g"])
    sw = sweedler()

    write("hopf_trivial.json", hopf_to_dict(triv))
    write("hopf_z2.json", hopf_to_dict(z2))
    write("hopf_z3.json", hopf_to_dict(z3))
    write("hopf_z4.json", hopf_to_dict(z4))
    write("hopf_dual_z2.json", hopf_to_dict(dz2))
    write("hopf_sweedler.json", hopf_to_dict(sw))

    # the antipode identity broken on the nilpotent generator; the inverse is
    # left out so loading recomputes it and only the antipode axiom fails
    bad = hopf_to_dict(sw)
    bad["antipode"] = [
        ["1", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["0", "0", "0", "1"],
        ["0", "0", "1", "0"],
    ]
    del bad["antipode_inv"]
    write("hopf_sweedler_bad_antipode.json", bad)

    write("coeff_trivial.json", modcomod_to_dict(trivial_modcomod(triv)))
    write("coeff_z2_trivial.json", modcomod_to_dict(trivial_modcomod(z2)))
    write(
        "coeff_z2_conjugation.json",
        modcomod_to_dict(conjugation_yd(cyclic_group_table(2))),
    )
    write(
        "coeff_z3_crossed_unstable.json",
        modcomod_to_dict(
            canonical_yd(z3, -1, grouplike=Mat.from_entries(3, 1, {(1, 0): 1}))
        ),
    )
    write(
        "coeff_sweedler_sigma.json",
        modcomod_to_dict(grouplike_twisted_coefficient(sw, 1)),
    )
    write("coeff_sweedler_adjoint.json", modcomod_to_dict(canonical_yd(sw, -1)))
    # a valid module paired with a valid comodule that fail the compatibility
    write(
        "coeff_sweedler_mismatch.json",
        modcomod_to_dict(ModComod(regular_module(sw), regular_comodule(sw))),
    )

    write("obj_trivial_ground_field.json", module_algebra_to_dict(ground_field_algebra(triv)))
    write("obj_trivial_dual_numbers.json", module_algebra_to_dict(dual_numbers_algebra(triv)))
    write(
        "obj_trivial_divided_power.json",
        module_coalgebra_to_dict(divided_power_coalgebra(triv)),
    )
    write("obj_sweedler_skew_lines.json", module_algebra_to_dict(skew_lines_algebra(sw)))
    write(
        "obj_sweedler_divided_power.json",
        module_coalgebra_to_dict(divided_power_coalgebra(sw)),
    )
    write(
        "obj_z2_conjugation_algebra.json",
        module_algebra_to_dict(group_conjugation_algebra(cyclic_group_table(2), z2)),
    )
    write(
        "obj_z2_group_coalgebra.json",
        module_coalgebra_to_dict(group_left_coalgebra(cyclic_group_table(2), z2)),
    )
    write(
        "obj_z2_signed_dual_numbers.json",
        module_algebra_to_dict(
            twisted_dual_numbers_algebra(z2, sign_character(cyclic_group_table(2)))
        ),
    )
    write(
        "obj_z3_permutation_algebra.json",
        module_algebra_to_dict(permutation_algebra(cyclic_group_table(3), z3)),
    )

    tower = build_contra_algebra(triv, trivial_modcomod(triv), dual_numbers_algebra(triv), 3)
    tower_dict = cyclic_object_to_dict(tower)
    write("tower_small.json", tower_dict)
    tampered = json.loads(json.dumps(tower_dict))
    # bump one entry of one coface
    tampered["faces"][1][1][0][0] = "7"
    write("tower_tampered.json", tampered)


if __name__ == "__main__":
    main()
