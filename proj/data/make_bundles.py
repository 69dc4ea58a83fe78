#!/usr/bin/env python3
"""Regenerates the example bundle files in this directory.

The bundles serialize curated worked-example data (orbits, base points,
component groups, Ev/Fourier/multiplicity tables, Arthur-side data,
endoscopic restrictions) in the documented schema; the library recomputes
and cross-checks everything it can and validates the rest through the
identity checks in `verify`.
"""

import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))


def write(name, obj):
    path = os.path.join(HERE, name + ".json")
    with open(path, "w") as f:
        json.dump(obj, f, indent=1, sort_keys=False)
        f.write("\n")
    print("wrote", path)


def gens(*triples):
    return [{"name": n, "order": o, "pattern": p} for (n, o, p) in triples]


def ogens(*pairs):
    return [{"name": n, "order": o} for (n, o) in pairs]


def ev(**strata):
    return {k: [{"ls": t} if isinstance(t, str) else t for t in v] for k, v in strata.items()}


# ---------------------------------------------------------------- so3 ------
so3 = {
    "schema_version": 1,
    "name": "so3",
    "display_name": "SO(3)",
    "description": "Unipotent representations of SO(3) with regular unramified parameter.",
    "instance": {
        "family": "GL",
        "dims": [1, 1],
        "end_factor": "none",
        "defining_rank": 2,
        "constraints": [{"exps": [1, 1], "order": 1}],
    },
    "pure_forms": [{"label": "0", "kottwitz": 1}, {"label": "1", "kottwitz": -1}],
    "strata": [
        {
            "name": "C0", "ranks": [[0]], "dim": 0, "dual": "Cy", "eccentricity": 0,
            "covers": [],
            "base_x": [0], "base_xi": [1],
            "a_group": [],
            "a_mic": gens(("-1", 2, [2, 2])),
            "local_systems": {"1": []},
            "mic_local_systems": {"1": [0], "E": [1]},
        },
        {
            "name": "Cy", "ranks": [[1]], "dim": 1, "dual": "C0", "eccentricity": 0,
            "covers": ["C0"],
            "base_x": [1], "base_xi": [0],
            "a_group": gens(("-1", 2, [2, 2])),
            "a_mic": gens(("-1", 2, [2, 2])),
            "local_systems": {"1": [0], "E": [1]},
            "mic_local_systems": {"1": [0], "E": [1]},
        },
    ],
    "simples": [
        {"name": "IC(1_C0)", "stratum": "C0", "local_system": "1",
         "rep": "pi(phi0)", "form": "0", "cuspidal": "T"},
        {"name": "IC(1_Cy)", "stratum": "Cy", "local_system": "1",
         "rep": "pi(phi1,+)", "form": "0", "cuspidal": "T"},
        {"name": "IC(E_Cy)", "stratum": "Cy", "local_system": "E",
         "rep": "pi(phi1,-)", "form": "1", "cuspidal": "G"},
    ],
    "evs": {
        "IC(1_C0)": ev(C0=["1"]),
        "IC(1_Cy)": ev(Cy=["1"]),
        "IC(E_Cy)": ev(C0=["E"], Cy=["E"]),
    },
    "hat": {"IC(1_C0)": "IC(1_Cy)", "IC(1_Cy)": "IC(1_C0)", "IC(E_Cy)": "IC(E_Cy)"},
    "m_rep": [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
    "m_geo_prime": [[1, 0, 0], [1, 1, 0], [0, 0, 1]],
    "arthur": [
        {
            "name": "psi0", "stratum": "C0", "s_psi": [1],
            "packet": [
                {"rep": "pi(phi0)", "form": "0", "character": [0]},
                {"rep": "pi(phi1,-)", "form": "1", "character": [1]},
            ],
            "aubert_partner": "psi1", "hat_gen_map": [0],
        },
        {
            "name": "psi1", "stratum": "Cy", "s_psi": [0],
            "packet": [
                {"rep": "pi(phi1,+)", "form": "0", "character": [0]},
                {"rep": "pi(phi1,-)", "form": "1", "character": [1]},
            ],
            "aubert_partner": "psi0", "hat_gen_map": [0],
        },
    ],
    "aubert": {
        "pi(phi0)|0": "pi(phi1,+)|0",
        "pi(phi1,+)|0": "pi(phi0)|0",
        "pi(phi1,-)|1": "pi(phi1,-)|1",
    },
    "non_arthur_strata": [],
    "endoscopy": [],
}
write("so3", so3)

# ---------------------------------------------------------------- u1 -------
u1 = {
    "schema_version": 1,
    "name": "u1",
    "display_name": "U(1)",
    "description": "Rank-one endoscopic factor with a ramified parameter: V = 0, "
                   "pi_0(H) = Z/2 supplied by the dataset.",
    "instance": {
        "family": "GL", "dims": [1], "end_factor": "none", "defining_rank": 1,
        "constraints": [],
        "component_group_override": {"orders": [2], "names": ["s"]},
    },
    "pure_forms": [{"label": "0", "kottwitz": 1}],
    "strata": [
        {
            "name": "C0", "ranks": [], "dim": 0, "dual": "C0", "eccentricity": 0,
            "covers": [], "base_x": [], "base_xi": [],
            "a_group": ogens(("s", 2)), "a_mic": ogens(("s", 2)),
            "local_systems": {"+": [0], "-": [1]},
            "mic_local_systems": {"+": [0], "-": [1]},
        }
    ],
    "simples": [
        {"name": "(+)_V'", "stratum": "C0", "local_system": "+",
         "rep": "chi+", "form": "0", "cuspidal": "T"},
        {"name": "(-)_V'", "stratum": "C0", "local_system": "-",
         "rep": "chi-", "form": "0", "cuspidal": "T"},
    ],
    "evs": {"(+)_V'": ev(C0=["+"]), "(-)_V'": ev(C0=["-"])},
    "hat": {"(+)_V'": "(+)_V'", "(-)_V'": "(-)_V'"},
    "m_rep": [[1, 0], [0, 1]],
    "m_geo_prime": [[1, 0], [0, 1]],
    "arthur": [],
    "aubert": {},
    "non_arthur_strata": [],
    "endoscopy": [],
}
write("u1", u1)

# ---------------------------------------------------------------- sl2 ------
SL2_CHARS = {"++": [0, 0], "-+": [1, 0], "+-": [0, 1], "--": [1, 1]}
sl2 = {
    "schema_version": 1,
    "name": "sl2",
    "display_name": "SL(2)",
    "description": "The 4-packet of quadratic unipotent representations of SL(2): "
                   "a ramified parameter whose reduction has V = 0 and "
                   "pi_0(H) = (Z/2)^2 supplied by the dataset.",
    "instance": {
        "family": "GL", "dims": [1], "end_factor": "none", "defining_rank": 1,
        "constraints": [],
        "component_group_override": {"orders": [2, 2], "names": ["n", "t"]},
    },
    "pure_forms": [{"label": "0", "kottwitz": 1}],
    "strata": [
        {
            "name": "C0", "ranks": [], "dim": 0, "dual": "C0", "eccentricity": 0,
            "covers": [], "base_x": [], "base_xi": [],
            "a_group": ogens(("n", 2), ("t", 2)),
            "a_mic": ogens(("n", 2), ("t", 2)),
            "local_systems": dict(SL2_CHARS),
            "mic_local_systems": dict(SL2_CHARS),
        }
    ],
    "simples": [
        {"name": f"({c})_V", "stratum": "C0", "local_system": c,
         "rep": f"pi(phi,{c})", "form": "0", "cuspidal": "G"}
        for c in ["++", "+-", "-+", "--"]
    ],
    "evs": {f"({c})_V": ev(C0=[c]) for c in ["++", "+-", "-+", "--"]},
    "hat": {f"({c})_V": f"({c})_V" for c in ["++", "+-", "-+", "--"]},
    "m_rep": [[1 if i == j else 0 for j in range(4)] for i in range(4)],
    "m_geo_prime": [[1 if i == j else 0 for j in range(4)] for i in range(4)],
    "arthur": [
        {
            "name": "psi", "stratum": "C0", "s_psi": [0, 0],
            "packet": [
                {"rep": f"pi(phi,{c})", "form": "0", "character": SL2_CHARS[c]}
                for c in ["++", "+-", "-+", "--"]
            ],
            "aubert_partner": "psi", "hat_gen_map": [0, 1],
        }
    ],
    "aubert": {f"pi(phi,{c})|0": f"pi(phi,{c})|0" for c in ["++", "+-", "-+", "--"]},
    "non_arthur_strata": [],
    "endoscopy": [
        {
            "name": tag,
            "s_note": note,
            "factors": ["u1"],
            "coord_map": [[]],
            "strata": [
                {"factors": ["C0"], "ambient": "C0", "lifts": True,
                 "a_s_ambient": a_s, "a_s_factors": [[1]]}
            ],
            "restriction": {
                f"({c})_V": [{"factors": ["(+)_V'" if
                              (SL2_CHARS[c][0] * a_s[0] + SL2_CHARS[c][1] * a_s[1]) % 2 == 0
                              else "(-)_V'"], "shift": 0}]
                for c in ["++", "+-", "-+", "--"]
            },
        }
        for tag, note, a_s in [
            ("u1-unramified", "s = diag(1,-1)", [0, 1]),
            ("u1-ramified-pi", "s = antidiag(1,-1)", [1, 0]),
            ("u1-ramified-upi", "s = antidiag(1,1)", [1, 1]),
        ]
    ],
}
write("sl2", sl2)

# ---------------------------------------------------------------- pgl4 -----
MU4 = {"+1": [0], "-1": [2], "+i": [1], "-i": [3]}
pgl4 = {
    "schema_version": 1,
    "name": "pgl4",
    "display_name": "PGL(4)",
    "description": "Shallow representations of PGL(4): ramified parameter whose "
                   "reduction is the SO(3) variety with H cut by (t1 t2)^2 = 1.",
    "instance": {
        "family": "GL", "dims": [1, 1], "end_factor": "none", "defining_rank": 2,
        "constraints": [{"exps": [1, 1], "order": 2}],
    },
    "pure_forms": [
        {"label": "0", "kottwitz": 1}, {"label": "1", "kottwitz": -1},
        {"label": "2", "kottwitz": 1}, {"label": "3", "kottwitz": -1},
    ],
    "strata": [
        {
            "name": "C0", "ranks": [[0]], "dim": 0, "dual": "Cy", "eccentricity": 0,
            "covers": [],
            "base_x": [0], "base_xi": [1],
            "a_group": gens(("z", 2, [1, 1])),
            "a_mic": gens(("z4", 4, [1, 1])),
            "local_systems": {"+": [0], "-": [1]},
            "mic_local_systems": dict(MU4),
        },
        {
            "name": "Cy", "ranks": [[1]], "dim": 1, "dual": "C0", "eccentricity": 0,
            "covers": ["C0"],
            "base_x": [1], "base_xi": [0],
            "a_group": gens(("z4", 4, [1, 1])),
            "a_mic": gens(("z4", 4, [1, 1])),
            "local_systems": dict(MU4),
            "mic_local_systems": dict(MU4),
        },
    ],
    "simples": [
        {"name": "IC(1+_C0)", "stratum": "C0", "local_system": "+",
         "rep": "pi(phi0,+)", "form": "0", "cuspidal": "T"},
        {"name": "IC(1-_C0)", "stratum": "C0", "local_system": "-",
         "rep": "pi(phi0,-)", "form": "2", "cuspidal": "T"},
        {"name": "IC(1+_Cy)", "stratum": "Cy", "local_system": "+1",
         "rep": "pi(phi1,+1)", "form": "0", "cuspidal": "T"},
        {"name": "IC(1-_Cy)", "stratum": "Cy", "local_system": "-1",
         "rep": "pi(phi1,-1)", "form": "2", "cuspidal": "T"},
        {"name": "IC(E+_Cy)", "stratum": "Cy", "local_system": "+i",
         "rep": "pi(phi1,+i)", "form": "1", "cuspidal": "G"},
        {"name": "IC(E-_Cy)", "stratum": "Cy", "local_system": "-i",
         "rep": "pi(phi1,-i)", "form": "3", "cuspidal": "G"},
    ],
    "evs": {
        "IC(1+_C0)": ev(C0=["+1"]),
        "IC(1-_C0)": ev(C0=["-1"]),
        "IC(1+_Cy)": ev(Cy=["+1"]),
        "IC(1-_Cy)": ev(Cy=["-1"]),
        "IC(E+_Cy)": ev(C0=["+i"], Cy=["+i"]),
        "IC(E-_Cy)": ev(C0=["-i"], Cy=["-i"]),
    },
    "hat": {
        "IC(1+_C0)": "IC(1+_Cy)", "IC(1+_Cy)": "IC(1+_C0)",
        "IC(1-_C0)": "IC(1-_Cy)", "IC(1-_Cy)": "IC(1-_C0)",
        "IC(E+_Cy)": "IC(E+_Cy)", "IC(E-_Cy)": "IC(E-_Cy)",
    },
    "m_rep": [
        [1, 0, 1, 0, 0, 0],
        [0, 1, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
    ],
    "m_geo_prime": [
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [1, 0, 1, 0, 0, 0],
        [0, 1, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
    ],
    "arthur": [
        {
            "name": "psi0", "stratum": "C0", "s_psi": [2],
            "packet": [
                {"rep": "pi(phi0,+)", "form": "0", "character": [0]},
                {"rep": "pi(phi0,-)", "form": "2", "character": [2]},
                {"rep": "pi(phi1,+i)", "form": "1", "character": [1]},
                {"rep": "pi(phi1,-i)", "form": "3", "character": [3]},
            ],
            "aubert_partner": "psi1", "hat_gen_map": [0],
        },
        {
            "name": "psi1", "stratum": "Cy", "s_psi": [0],
            "packet": [
                {"rep": "pi(phi1,+1)", "form": "0", "character": [0]},
                {"rep": "pi(phi1,-1)", "form": "2", "character": [2]},
                {"rep": "pi(phi1,+i)", "form": "1", "character": [1]},
                {"rep": "pi(phi1,-i)", "form": "3", "character": [3]},
            ],
            "aubert_partner": "psi0", "hat_gen_map": [0],
        },
    ],
    "aubert": {
        "pi(phi0,+)|0": "pi(phi1,+1)|0", "pi(phi1,+1)|0": "pi(phi0,+)|0",
        "pi(phi0,-)|2": "pi(phi1,-1)|2", "pi(phi1,-1)|2": "pi(phi0,-)|2",
        "pi(phi1,+i)|1": "pi(phi1,+i)|1", "pi(phi1,-i)|3": "pi(phi1,-i)|3",
    },
    "non_arthur_strata": [],
    "endoscopy": [],
}
write("pgl4", pgl4)

# ---------------------------------------------------------------- so5reg ---
so5r = {
    "schema_version": 1,
    "name": "so5_regular",
    "display_name": "SO(5)-regular",
    "description": "Unipotent representations of SO(5) with regular unramified parameter.",
    "instance": {
        "family": "Sp", "dims": [1, 1], "end_factor": "sym2", "defining_rank": 4,
        "constraints": [],
    },
    "pure_forms": [{"label": "0", "kottwitz": 1}, {"label": "1", "kottwitz": -1}],
    "strata": [
        {
            "name": "C0", "ranks": [[0, 0, 0], [0, 0], [0]], "dim": 0, "dual": "Cux",
            "eccentricity": 0, "covers": [],
            "base_x": [0, 0], "base_xi": [1, 1],
            "a_group": [],
            "a_mic": gens(("-1", 2, [2, 2])),
            "local_systems": {"1": []},
            "mic_local_systems": {"1": [0], "L": [1]},
        },
        {
            "name": "Cu", "ranks": [[1, 0, 0], [0, 0], [1]], "dim": 1, "dual": "Cx",
            "eccentricity": 0, "covers": ["C0"],
            "base_x": [1, 0], "base_xi": [0, 1],
            "a_group": [],
            "a_mic": gens(("-1", 2, [2, 2])),
            "local_systems": {"1": []},
            "mic_local_systems": {"1": [0], "L": [1]},
        },
        {
            "name": "Cx", "ranks": [[0, 0, 0], [1, 0], [0]], "dim": 1, "dual": "Cu",
            "eccentricity": 0, "covers": ["C0"],
            "base_x": [0, 1], "base_xi": [1, 0],
            "a_group": gens(("-1", 2, [2, 2])),
            "a_mic": gens(("-1", 2, [2, 2])),
            "local_systems": {"1": [0], "L": [1]},
            "mic_local_systems": {"1": [0], "L": [1]},
        },
        {
            "name": "Cux", "ranks": [[1, 1, 1], [1, 1], [1]], "dim": 2, "dual": "C0",
            "eccentricity": 0, "covers": ["Cu", "Cx"],
            "base_x": [1, 1], "base_xi": [0, 0],
            "a_group": gens(("-1", 2, [2, 2])),
            "a_mic": gens(("-1", 2, [2, 2])),
            "local_systems": {"1": [0], "L": [1]},
            "mic_local_systems": {"1": [0], "L": [1]},
        },
    ],
    "simples": [
        {"name": "IC(1_C0)", "stratum": "C0", "local_system": "1",
         "rep": "pi(phi0)", "form": "0", "cuspidal": "T"},
        {"name": "IC(1_Cu)", "stratum": "Cu", "local_system": "1",
         "rep": "pi(phi1)", "form": "0", "cuspidal": "T"},
        {"name": "IC(1_Cx)", "stratum": "Cx", "local_system": "1",
         "rep": "pi(phi2,+)", "form": "0", "cuspidal": "T"},
        {"name": "IC(1_Cux)", "stratum": "Cux", "local_system": "1",
         "rep": "pi(phi3,+)", "form": "0", "cuspidal": "T"},
        {"name": "IC(L_Cx)", "stratum": "Cx", "local_system": "L",
         "rep": "pi(phi2,-)", "form": "1", "cuspidal": "M"},
        {"name": "IC(L_Cux)", "stratum": "Cux", "local_system": "L",
         "rep": "pi(phi3,-)", "form": "1", "cuspidal": "M"},
    ],
    "evs": {
        "IC(1_C0)": ev(C0=["1"]),
        "IC(1_Cu)": ev(Cu=["1"]),
        "IC(1_Cx)": ev(Cx=["1"]),
        "IC(1_Cux)": ev(Cux=["1"]),
        "IC(L_Cx)": ev(C0=["L"], Cx=["L"]),
        "IC(L_Cux)": ev(Cu=["L"], Cux=["L"]),
    },
    "hat": {
        "IC(1_C0)": "IC(1_Cux)", "IC(1_Cux)": "IC(1_C0)",
        "IC(1_Cu)": "IC(1_Cx)", "IC(1_Cx)": "IC(1_Cu)",
        "IC(L_Cx)": "IC(L_Cux)", "IC(L_Cux)": "IC(L_Cx)",
    },
    "m_rep": [
        [1, 1, 1, 1, 0, 0],
        [0, 1, 0, 1, 0, 0],
        [0, 0, 1, 1, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 1],
    ],
    "m_geo_prime": [
        [1, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0],
        [1, 0, 1, 0, 0, 0],
        [1, 1, 1, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1, 1],
    ],
    "arthur": [
        {
            "name": "psi0", "stratum": "C0", "s_psi": [1],
            "packet": [
                {"rep": "pi(phi0)", "form": "0", "character": [0]},
                {"rep": "pi(phi2,-)", "form": "1", "character": [1]},
            ],
            "aubert_partner": "psi3", "hat_gen_map": [0],
        },
        {
            "name": "psi3", "stratum": "Cux", "s_psi": [0],
            "packet": [
                {"rep": "pi(phi3,+)", "form": "0", "character": [0]},
                {"rep": "pi(phi3,-)", "form": "1", "character": [1]},
            ],
            "aubert_partner": "psi0", "hat_gen_map": [0],
        },
    ],
    "aubert": {
        "pi(phi0)|0": "pi(phi3,+)|0", "pi(phi3,+)|0": "pi(phi0)|0",
        "pi(phi1)|0": "pi(phi2,+)|0", "pi(phi2,+)|0": "pi(phi1)|0",
        "pi(phi2,-)|1": "pi(phi3,-)|1", "pi(phi3,-)|1": "pi(phi2,-)|1",
    },
    "non_arthur_strata": ["Cu", "Cx"],
    "endoscopy": [],
}
write("so5_regular", so5r)

# ---------------------------------------------------------------- so5sing --
so5s = {
    "schema_version": 1,
    "name": "so5_singular",
    "display_name": "SO(5)-singular",
    "description": "Unipotent representations of SO(5) with singular unramified "
                   "parameter; first nontrivial twisting system and the "
                   "SO(3)xSO(3) endoscopic restriction.",
    "instance": {
        "family": "Sp", "dims": [2], "end_factor": "sym2", "defining_rank": 4,
        "constraints": [],
    },
    "pure_forms": [{"label": "0", "kottwitz": 1}, {"label": "1", "kottwitz": -1}],
    "strata": [
        {
            "name": "C0", "ranks": [[0]], "dim": 0, "dual": "C3", "eccentricity": 0,
            "covers": [],
            "base_x": [0, 0, 0], "base_xi": [1, 0, 1],
            "a_group": [],
            "a_mic": gens(("m", 2, [2, 0])),
            "local_systems": {"1": []},
            "mic_local_systems": {"1": [0], "L": [1]},
        },
        {
            "name": "C2", "ranks": [[1]], "dim": 2, "dual": "C2", "eccentricity": 1,
            "covers": ["C0"],
            "base_x": [1, 0, 0], "base_xi": [0, 0, 1],
            "a_group": gens(("d", 2, [2, 0])),
            "a_mic": gens(("s1", 2, [2, 0]), ("s2", 2, [0, 2])),
            "hat_mic_gen_map": [1, 0],
            "local_systems": {"1": [0], "F": [1]},
            "mic_local_systems": {"1": [0, 0], "L": [1, 1], "F": [1, 0], "E": [0, 1]},
        },
        {
            "name": "C3", "ranks": [[2]], "dim": 3, "dual": "C0", "eccentricity": 0,
            "covers": ["C2"],
            "base_x": [1, 0, 1], "base_xi": [0, 0, 0],
            "a_group": gens(("m", 2, [2, 0])),
            "a_mic": gens(("m", 2, [2, 0])),
            "local_systems": {"1": [0], "L": [1]},
            "mic_local_systems": {"1": [0], "L": [1]},
        },
    ],
    "simples": [
        {"name": "IC(1_C0)", "stratum": "C0", "local_system": "1",
         "rep": "pi(phi0)", "form": "0", "cuspidal": "T"},
        {"name": "IC(1_C2)", "stratum": "C2", "local_system": "1",
         "rep": "pi(phi2,+)", "form": "0", "cuspidal": "T"},
        {"name": "IC(1_C3)", "stratum": "C3", "local_system": "1",
         "rep": "pi(phi3,+)", "form": "0", "cuspidal": "T"},
        {"name": "IC(L_C3)", "stratum": "C3", "local_system": "L",
         "rep": "pi(phi3,-)", "form": "0", "cuspidal": "T"},
        {"name": "IC(F_C2)", "stratum": "C2", "local_system": "F",
         "rep": "pi(phi2,-)", "form": "1", "cuspidal": "M"},
    ],
    "evs": {
        "IC(1_C0)": ev(C0=["1"]),
        "IC(1_C2)": ev(C0=["L"], C2=["L"]),
        "IC(1_C3)": ev(C3=["1"]),
        "IC(L_C3)": ev(C2=["1"], C3=["L"]),
        "IC(F_C2)": ev(C2=["E"]),
    },
    "hat": {
        "IC(1_C0)": "IC(1_C3)", "IC(1_C3)": "IC(1_C0)",
        "IC(1_C2)": "IC(L_C3)", "IC(L_C3)": "IC(1_C2)",
        "IC(F_C2)": "IC(F_C2)",
    },
    "m_rep": [
        [1, 1, 1, 1, 0],
        [0, 1, 1, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
    ],
    "m_geo_prime": [
        [1, 0, 0, 0, 0],
        [1, 1, 0, 0, 0],
        [1, 1, 1, 0, 0],
        [1, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
    ],
    "arthur": [
        {
            "name": "psi0", "stratum": "C0", "s_psi": [0],
            "packet": [
                {"rep": "pi(phi0)", "form": "0", "character": [0]},
                {"rep": "pi(phi2,+)", "form": "0", "character": [1]},
            ],
            "aubert_partner": "psi3", "hat_gen_map": [0],
        },
        {
            "name": "psi2", "stratum": "C2", "s_psi": [0, 1],
            "packet": [
                {"rep": "pi(phi2,+)", "form": "0", "character": [0, 0]},
                {"rep": "pi(phi2,-)", "form": "1", "character": [1, 0]},
                {"rep": "pi(phi3,-)", "form": "0", "character": [1, 1]},
            ],
            "aubert_partner": "psi2", "hat_gen_map": [1, 0],
        },
        {
            "name": "psi3", "stratum": "C3", "s_psi": [0],
            "packet": [
                {"rep": "pi(phi3,+)", "form": "0", "character": [0]},
                {"rep": "pi(phi3,-)", "form": "0", "character": [1]},
            ],
            "aubert_partner": "psi0", "hat_gen_map": [0],
        },
    ],
    "aubert": {
        "pi(phi0)|0": "pi(phi3,+)|0", "pi(phi3,+)|0": "pi(phi0)|0",
        "pi(phi2,+)|0": "pi(phi3,-)|0", "pi(phi3,-)|0": "pi(phi2,+)|0",
        "pi(phi2,-)|1": "pi(phi2,-)|1",
    },
    "non_arthur_strata": [],
    "endoscopy": [
        {
            "name": "so3xso3",
            "s_note": "s = diag(1,-1,-1,1)",
            "s_pattern": [0, 2],
            "factors": ["so3", "so3"],
            "coord_map": [[[0, "1"]], [[2, "1"]]],
            "strata": [
                {"factors": ["C0", "C0"], "ambient": "C0", "lifts": True,
                 "a_s_ambient": [1], "a_s_factors": [[0], [1]]},
                {"factors": ["Cy", "C0"], "ambient": "C2", "lifts": True,
                 "a_s_ambient": [0, 1], "a_s_factors": [[0], [1]]},
                {"factors": ["C0", "Cy"], "ambient": "C2", "lifts": True,
                 "a_s_ambient": [1, 0], "a_s_factors": [[0], [1]],
                 "transport": [[["0", "1"], ["1", "0"]]]},
                {"factors": ["Cy", "Cy"], "ambient": "C3", "lifts": True,
                 "a_s_ambient": [1], "a_s_factors": [[0], [1]]},
            ],
            "restriction": {
                "IC(1_C0)": [{"factors": ["IC(1_C0)", "IC(1_C0)"], "shift": 0}],
                "IC(1_C2)": [
                    {"factors": ["IC(1_Cy)", "IC(1_C0)"], "shift": 1},
                    {"factors": ["IC(1_C0)", "IC(1_Cy)"], "shift": 1},
                    {"factors": ["IC(1_C0)", "IC(1_C0)"], "shift": 1},
                ],
                "IC(1_C3)": [{"factors": ["IC(1_Cy)", "IC(1_Cy)"], "shift": 1}],
                "IC(L_C3)": [
                    {"factors": ["IC(1_C0)", "IC(1_C0)"], "shift": 1},
                    {"factors": ["IC(E_Cy)", "IC(E_Cy)"], "shift": 1},
                ],
                "IC(F_C2)": [
                    {"factors": ["IC(E_Cy)", "IC(1_C0)"], "shift": 1},
                    {"factors": ["IC(1_C0)", "IC(E_Cy)"], "shift": 1},
                ],
            },
        }
    ],
}
write("so5_singular", so5s)


# ---------------------------------------------------------------- so7 ------
S2 = {"1": [0, 0], "L": [1, 1], "F": [1, 0], "E": [0, 1]}
Z2 = {"1": [0], "F": [1]}
S2G = gens(("s2", 2, [2, 2, 0]), ("s3", 2, [0, 0, 2]))
ZG = gens(("z", 2, [2, 2, 2]))

so7 = {
    "schema_version": 1,
    "name": "so7",
    "display_name": "SO(7)",
    "description": "Unipotent representations of SO(7) with singular unramified "
                   "parameter; 15 simples, nontrivial twisting at two strata, and "
                   "the SO(5)xSO(3) endoscopic restriction.",
    "instance": {
        "family": "Sp", "dims": [1, 2], "end_factor": "sym2", "defining_rank": 6,
        "constraints": [],
    },
    "pure_forms": [{"label": "0", "kottwitz": 1}, {"label": "1", "kottwitz": -1}],
    # flat V coords: [u, v, X11, X12, X22]; flat V* coords: [u'1, u'2, X'11, X'12, X'22]
    "strata": [
        {
            "name": "C0", "ranks": [[0, 0, 0], [0, 0], [0]], "dim": 0, "dual": "C7",
            "eccentricity": 0, "covers": [],
            "base_x": [0, 0, 0, 0, 0], "base_xi": [1, 0, 1, 0, 1],
            "a_group": [],
            "a_mic": S2G,
            "local_systems": {"1": []},
            "mic_local_systems": dict(S2),
        },
        {
            "name": "C1", "ranks": [[1, 0, 0], [0, 0], [1]], "dim": 2, "dual": "C3",
            "eccentricity": 0, "covers": ["C0"],
            "base_x": [1, 0, 0, 0, 0], "base_xi": [0, 0, 1, 0, 1],
            "a_group": [],
            "a_mic": S2G,
            "local_systems": {"1": []},
            "mic_local_systems": dict(S2),
        },
        {
            "name": "C2", "ranks": [[0, 0, 0], [1, 0], [0]], "dim": 2, "dual": "C6",
            "eccentricity": 1, "covers": ["C0"],
            "base_x": [0, 0, 0, 0, 1], "base_xi": [1, 0, 1, 0, 0],
            "a_group": gens(("g", 2, [0, 0, 2])),
            "a_mic": S2G,
            "local_systems": {"1": [0], "F": [1]},
            "mic_local_systems": dict(S2),
        },
        {
            "name": "C3", "ranks": [[0, 0, 0], [2, 0], [0]], "dim": 3, "dual": "C1",
            "eccentricity": 0, "covers": ["C2"],
            "base_x": [0, 0, 1, 0, 1], "base_xi": [1, 0, 0, 0, 0],
            "a_group": gens(("g", 2, [0, 2, 0])),
            "a_mic": S2G,
            "local_systems": {"1": [0], "L": [1]},
            "mic_local_systems": dict(S2),
        },
        {
            "name": "C4", "ranks": [[1, 0, 0], [1, 0], [1]], "dim": 3, "dual": "C5",
            "eccentricity": 2, "covers": ["C1", "C2"],
            "base_x": [1, 0, 0, 0, 1], "base_xi": [0, 2, 1, 1, 0],
            "a_group": gens(("g", 2, [0, 0, 2])),
            "a_mic": ZG,
            "local_systems": {"1": [0], "F": [1]},
            "mic_local_systems": dict(Z2),
        },
        {
            "name": "C5", "ranks": [[1, 1, 0], [2, 1], [1]], "dim": 4, "dual": "C4",
            "eccentricity": 2, "covers": ["C3", "C4"],
            "base_x": [1, 1, 1, 0, -1], "base_xi": [2, -2, 1, 1, 1],
            "a_group": [],
            "a_mic": ZG,
            "local_systems": {"1": []},
            "mic_local_systems": dict(Z2),
        },
        {
            "name": "C6", "ranks": [[1, 1, 1], [1, 1], [1]], "dim": 4, "dual": "C2",
            "eccentricity": 1, "covers": ["C4"],
            "base_x": [1, 0, 1, 0, 0], "base_xi": [0, 0, 0, 0, 1],
            "a_group": gens(("g", 2, [2, 2, 0])),
            "a_mic": S2G,
            "local_systems": {"1": [0], "F": [1]},
            "mic_local_systems": dict(S2),
        },
        {
            "name": "C7", "ranks": [[1, 1, 1], [2, 1], [1]], "dim": 5, "dual": "C0",
            "eccentricity": 0, "covers": ["C5", "C6"],
            "base_x": [1, 0, 1, 0, 1], "base_xi": [0, 0, 0, 0, 0],
            "a_group": S2G,
            "a_mic": S2G,
            "local_systems": dict(S2),
            "mic_local_systems": dict(S2),
        },
    ],
    "simples": [
        {"name": "IC(1_C0)", "stratum": "C0", "local_system": "1",
         "rep": "pi0", "form": "0", "cuspidal": "T"},
        {"name": "IC(1_C1)", "stratum": "C1", "local_system": "1",
         "rep": "pi1", "form": "0", "cuspidal": "T"},
        {"name": "IC(1_C2)", "stratum": "C2", "local_system": "1",
         "rep": "pi2+", "form": "0", "cuspidal": "T"},
        {"name": "IC(1_C3)", "stratum": "C3", "local_system": "1",
         "rep": "pi3+", "form": "0", "cuspidal": "T"},
        {"name": "IC(L_C3)", "stratum": "C3", "local_system": "L",
         "rep": "pi3-", "form": "0", "cuspidal": "T"},
        {"name": "IC(1_C4)", "stratum": "C4", "local_system": "1",
         "rep": "pi4+", "form": "0", "cuspidal": "T"},
        {"name": "IC(1_C5)", "stratum": "C5", "local_system": "1",
         "rep": "pi5", "form": "0", "cuspidal": "T"},
        {"name": "IC(1_C6)", "stratum": "C6", "local_system": "1",
         "rep": "pi6+", "form": "0", "cuspidal": "T"},
        {"name": "IC(1_C7)", "stratum": "C7", "local_system": "1",
         "rep": "pi7++", "form": "0", "cuspidal": "T"},
        {"name": "IC(L_C7)", "stratum": "C7", "local_system": "L",
         "rep": "pi7--", "form": "0", "cuspidal": "T"},
        {"name": "IC(F_C2)", "stratum": "C2", "local_system": "F",
         "rep": "pi2-", "form": "1", "cuspidal": "M"},
        {"name": "IC(F_C4)", "stratum": "C4", "local_system": "F",
         "rep": "pi4-", "form": "1", "cuspidal": "M"},
        {"name": "IC(F_C6)", "stratum": "C6", "local_system": "F",
         "rep": "pi6-", "form": "1", "cuspidal": "M"},
        {"name": "IC(F_C7)", "stratum": "C7", "local_system": "F",
         "rep": "pi7-+", "form": "1", "cuspidal": "M"},
        {"name": "IC(E_C7)", "stratum": "C7", "local_system": "E",
         "rep": "pi7+-", "form": "1", "cuspidal": "G"},
    ],
    "evs": {
        "IC(1_C0)": ev(C0=["1"]),
        "IC(1_C1)": ev(C1=["1"]),
        "IC(1_C2)": ev(C0=["L"], C2=["L"]),
        "IC(1_C3)": ev(C3=["1"]),
        "IC(L_C3)": ev(C2=["1"], C3=["L"]),
        "IC(1_C4)": ev(C4=["1"]),
        "IC(1_C5)": ev(C5=["1"]),
        "IC(1_C6)": ev(C1=["L"], C6=["L"]),
        "IC(1_C7)": ev(C7=["1"]),
        "IC(L_C7)": ev(C6=["1"], C7=["L"]),
        "IC(F_C2)": ev(C2=["F"]),
        "IC(F_C4)": ev(C0=["F"], C1=["F"], C4=["F"]),
        "IC(F_C6)": ev(C6=["E"]),
        "IC(F_C7)": ev(C3=["F"], C5=["F"], C7=["F"]),
        "IC(E_C7)": ev(C0=["E"], C1=["F"], C2=["E"], C3=["F"],
                       C4=["F"], C5=["F"], C6=["F"], C7=["E"]),
    },
    "hat": {
        "IC(1_C0)": "IC(1_C7)", "IC(1_C7)": "IC(1_C0)",
        "IC(1_C1)": "IC(1_C3)", "IC(1_C3)": "IC(1_C1)",
        "IC(1_C2)": "IC(L_C7)", "IC(L_C7)": "IC(1_C2)",
        "IC(L_C3)": "IC(1_C6)", "IC(1_C6)": "IC(L_C3)",
        "IC(1_C4)": "IC(1_C5)", "IC(1_C5)": "IC(1_C4)",
        "IC(F_C2)": "IC(F_C6)", "IC(F_C6)": "IC(F_C2)",
        "IC(F_C4)": "IC(F_C7)", "IC(F_C7)": "IC(F_C4)",
        "IC(E_C7)": "IC(E_C7)",
    },
    "m_rep": [
        [1, 1, 1, 1, 1, 2, 2, 1, 1, 1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ],
    "m_geo_prime": [
        [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [2, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [2, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        [1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ],
    "arthur": [
        {
            "name": "psi0", "stratum": "C0", "s_psi": [1, 1],
            "packet": [
                {"rep": "pi0", "form": "0", "character": [0, 0]},
                {"rep": "pi2+", "form": "0", "character": [1, 1]},
                {"rep": "pi4-", "form": "1", "character": [1, 0]},
                {"rep": "pi7+-", "form": "1", "character": [0, 1]},
            ],
            "aubert_partner": "psi7", "hat_gen_map": [0, 1],
        },
        {
            "name": "psi2", "stratum": "C2", "s_psi": [1, 0],
            "packet": [
                {"rep": "pi2+", "form": "0", "character": [0, 0]},
                {"rep": "pi3-", "form": "0", "character": [1, 1]},
                {"rep": "pi2-", "form": "1", "character": [0, 1]},
                {"rep": "pi7+-", "form": "1", "character": [1, 0]},
            ],
            "aubert_partner": "psi6", "hat_gen_map": [0, 1],
        },
        {
            "name": "psi4", "stratum": "C4", "s_psi": [0],
            "packet": [
                {"rep": "pi4+", "form": "0", "character": [0]},
                {"rep": "pi4-", "form": "1", "character": [1]},
                {"rep": "pi7+-", "form": "1", "character": [1]},
            ],
            "aubert_partner": "psi5", "hat_gen_map": [0],
        },
        {
            "name": "psi5", "stratum": "C5", "s_psi": [1],
            "packet": [
                {"rep": "pi5", "form": "0", "character": [0]},
                {"rep": "pi7-+", "form": "1", "character": [1]},
                {"rep": "pi7+-", "form": "1", "character": [1]},
            ],
            "aubert_partner": "psi4", "hat_gen_map": [0],
        },
        {
            "name": "psi6", "stratum": "C6", "s_psi": [0, 1],
            "packet": [
                {"rep": "pi6+", "form": "0", "character": [0, 0]},
                {"rep": "pi7--", "form": "0", "character": [1, 1]},
                {"rep": "pi6-", "form": "1", "character": [1, 0]},
                {"rep": "pi7+-", "form": "1", "character": [0, 1]},
            ],
            "aubert_partner": "psi2", "hat_gen_map": [0, 1],
        },
        {
            "name": "psi7", "stratum": "C7", "s_psi": [0, 0],
            "packet": [
                {"rep": "pi7++", "form": "0", "character": [0, 0]},
                {"rep": "pi7--", "form": "0", "character": [1, 1]},
                {"rep": "pi7-+", "form": "1", "character": [1, 0]},
                {"rep": "pi7+-", "form": "1", "character": [0, 1]},
            ],
            "aubert_partner": "psi0", "hat_gen_map": [0, 1],
        },
    ],
    "aubert": {
        "pi0|0": "pi7++|0", "pi7++|0": "pi0|0",
        "pi1|0": "pi3+|0", "pi3+|0": "pi1|0",
        "pi2+|0": "pi7--|0", "pi7--|0": "pi2+|0",
        "pi3-|0": "pi6+|0", "pi6+|0": "pi3-|0",
        "pi4+|0": "pi5|0", "pi5|0": "pi4+|0",
        "pi2-|1": "pi6-|1", "pi6-|1": "pi2-|1",
        "pi4-|1": "pi7-+|1", "pi7-+|1": "pi4-|1",
        "pi7+-|1": "pi7+-|1",
    },
    "non_arthur_strata": ["C1", "C3"],
    "endoscopy": [
        {
            "name": "so5xso3",
            "s_note": "s = diag(1,1,-1,-1,1,1)",
            "s_pattern": [0, 0, 2],
            "factors": ["so5_regular", "so3"],
            "coord_map": [[[0, "1"], [2, "1"]], [[4, "1"]]],
            "strata": [
                {"factors": ["C0", "C0"], "ambient": "C0", "lifts": True,
                 "a_s_ambient": [0, 1], "a_s_factors": [[0], [1]]},
                {"factors": ["Cu", "C0"], "ambient": "C1", "lifts": True,
                 "a_s_ambient": [0, 1], "a_s_factors": [[0], [1]]},
                {"factors": ["C0", "Cy"], "ambient": "C2", "lifts": True,
                 "a_s_ambient": [0, 1], "a_s_factors": [[0], [1]]},
                {"factors": ["Cx", "C0"], "ambient": "C2", "lifts": False},
                {"factors": ["Cx", "Cy"], "ambient": "C3", "lifts": True,
                 "a_s_ambient": [0, 1], "a_s_factors": [[0], [1]]},
                {"factors": ["Cu", "Cy"], "ambient": "C4", "lifts": False},
                {"factors": ["Cux", "C0"], "ambient": "C6", "lifts": True,
                 "a_s_ambient": [0, 1], "a_s_factors": [[0], [1]]},
                {"factors": ["Cux", "Cy"], "ambient": "C7", "lifts": True,
                 "a_s_ambient": [0, 1], "a_s_factors": [[0], [1]]},
            ],
            "restriction": {
                "IC(E_C7)": [
                    {"factors": ["IC(L_Cux)", "IC(E_Cy)"], "shift": 2},
                    {"factors": ["IC(L_Cx)", "IC(E_Cy)"], "shift": 2},
                ],
                "IC(F_C4)": [
                    {"factors": ["IC(1_Cu)", "IC(E_Cy)"], "shift": 2},
                    {"factors": ["IC(L_Cx)", "IC(1_C0)"], "shift": 2},
                ],
            },
        }
    ],
}
write("so7", so7)
