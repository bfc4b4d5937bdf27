"""
Shipped group data and the JSON group-spec file format.

The JSON files in ``heckecenter/groups/`` are generated by :func:`build_a2`
and :func:`build_g4` (``python -m heckecenter.groupdata`` rewrites them).  The
builders write every matrix entry in terms of the Hecke constants, which are
themselves computed from elementary symmetric polynomials, so nothing is
hand-expanded.

File schema (all indices 0-based; words are lists of ``[generator, exponent]``;
polynomials are lists of ``[exponent-vector, coefficient-string]``)::

    {
      "name": str, "k": int, "variable_names": [str],
      "families": [{"order": e_s, "parameters": [variable index, ...]}],
      "generator_family": [family index per generator],
      "distinguished": generator index of sigma_0,
      "group_order": |W|,
      "braid_relations": [[word, word], ...],
      "coset_words": [word, ...],                  # coset_words[0] == []
      "rho": [m x m matrix per generator],         # entry: null or e polynomials
      "class_reps": {name: [basis index per class]},
      "pi_word": word, "central_words": {name: word},
      "reference_center": [[polynomial per basis index], ...] | null,
      "basis_labels": [str] | null,
      "representations": [{"name", "dim", "matrices": [d x d per generator]}] | null,
      "notes": str
    }

Representation matrix entries are polynomials, or ``{"num": poly, "den": poly}``.
"""

import json
from importlib import resources
from pathlib import Path

from .hecke import Family, GroupSpec, HeckeElement, _norm_word
from .ring import LaurentPoly, RatFunc, variables

__all__ = ["build_a2", "build_g4", "load_group", "load_spec", "dump_spec",
           "spec_to_json", "spec_from_json", "BUILTIN", "RepresentationData"]

BUILTIN = ("a2", "g4")


class RepresentationData:
    """Irreducible matrix representation over Frac(R): one d x d matrix per generator."""

    def __init__(self, name, dim, matrices):
        self.name = name
        self.dim = dim
        self.matrices = tuple(tuple(tuple(r) for r in M) for M in matrices)

    def to_json(self):
        return {"name": self.name, "dim": self.dim,
                "matrices": [[[x.to_json() for x in r] for r in M] for M in self.matrices]}

    @classmethod
    def from_json(cls, data, k):
        mats = [[[RatFunc.from_json(x, k) for x in r] for r in M] for M in data["matrices"]]
        return cls(data["name"], data["dim"], mats)

    def __repr__(self):
        return f"RepresentationData({self.name!r}, dim={self.dim})"


def _hecke_element(vec):
    return HeckeElement(tuple(vec))


def build_a2():
    """
    Type A2 with W' = <s>: sigma_0 = T_s, cosets x = 1, t, ts, so the basis is
    b0..b5 = T_1, T_s, T_t, T_st, T_ts, T_sts.
    """
    k = 2
    u1, u2 = variables(k)
    fam = Family(2, (0, 1))
    c, d = fam.hecke_coefficients(k)[1], fam.hecke_coefficients(k)[0]
    spec0 = GroupSpec(name="A2", k=k, families=(fam,), generator_family=(0, 0),
                      distinguished=0, braid_relations=(), coset_words=((),),
                      rho=(), group_order=6)
    H = spec0.hprime
    S = H.sigma()
    one = H.one()
    rho_s = [[S, None, None],
             [None, None, one],
             [None, H.scalar(d), H.scalar(c)]]
    rho_t = [[None, one, None],
             [H.scalar(d), H.scalar(c), None],
             [None, None, S]]
    zero, unit = LaurentPoly.constant(0, k), LaurentPoly.constant(1, k)

    def vec(**kw):
        labels = ("T1", "Ts", "Tt", "Tst", "Tts", "Tsts")
        return _hecke_element([kw.get(l, zero) for l in labels])

    # the polynomial basis obtained from maximal-length representatives
    reference = (
        vec(T1=unit),
        vec(Ts=d, Tt=d, Tsts=unit),
        vec(Ts=-c, Tt=-c, Tst=unit, Tts=unit),
    )
    R = lambda x: RatFunc(x)  # noqa: E731
    reps = (
        RepresentationData("index", 1, [[[R(u1)]], [[R(u1)]]]),
        RepresentationData("sign", 1, [[[R(u2)]], [[R(u2)]]]),
        RepresentationData("reflection", 2, [
            [[R(u1), R(zero)], [R(unit), R(u2)]],
            [[R(u2), R(d)], [R(zero), R(u1)]],
        ]),
    )
    st = ((0, 1), (1, 1))
    return GroupSpec(
        name="A2", k=k, families=(fam,), generator_family=(0, 0), distinguished=0,
        braid_relations=((((0, 1), (1, 1), (0, 1)), ((1, 1), (0, 1), (1, 1))),),
        coset_words=((), ((1, 1),), ((1, 1), (0, 1))),
        rho=(tuple(map(tuple, rho_s)), tuple(map(tuple, rho_t))),
        group_order=6,
        class_reps={"minimal": (0, 1, 3), "maximal": (0, 5, 3)},
        pi_word=st * 3,
        central_words={"w0^2": st * 3},
        reference_center=reference,
        basis_labels=("T1", "Ts", "Tt", "Tst", "Tts", "Tsts"),
        representations=reps,
        notes="T_s^2 = c T_s + d with c = u1 + u2, d = -u1 u2; index/sign/reflection "
              "representations send T_s to u1, u2 and [[u1, 0], [1, u2]].",
    )


def build_g4():
    """
    G4 with sigma_0 = sigma_1, W' = <s1>, coset representatives
    x1..x8 = 1, s2, s2 s1 s2, s2 s1 s2 s1, z, z s2, z s2 s1 s2, z s2 s1 s2 s1
    with z = (s1 s2)^3, and basis b[3i + p] = sigma_1^p x_{i+1}.
    """
    k = 3
    fam = Family(3, (0, 1, 2))
    c, b, a = fam.hecke_coefficients(k)  # sigma^3 = a sigma^2 + b sigma + c
    spec0 = GroupSpec(name="G4", k=k, families=(fam,), generator_family=(0, 0),
                      distinguished=0, braid_relations=(), coset_words=((),),
                      rho=(), group_order=24)
    H = spec0.hprime
    S = H.sigma()
    Si = S ** -1
    Sii = Si * Si
    one = H.one()
    ci = c ** -1
    N = None

    def h(x):
        return H.scalar(x)

    rho1 = [
        [S, N, N, N, N, N, N, N],
        [N, N, Si, N, N, N, N, N],
        [N, N, N, one, N, N, N, N],
        [N, c * S, h(b), h(a), N, N, N, N],
        [N, N, N, N, S, N, N, N],
        [N, N, N, N, N, N, Si, N],
        [N, N, N, N, N, N, N, one],
        [N, N, N, N, N, c * S, h(b), h(a)],
    ]
    rho2 = [
        [N, one, N, N, N, N, N, N],
        [N, N, h(-b * ci), N, -a * ci * Sii, -b * ci ** 2 * Si, -a * ci ** 2 * Sii, ci ** 2 * Sii],
        [N, N, S, N, N, N, N, N],
        [N, N, N, N, Si, N, N, N],
        [N, N, N, N, N, one, N, N],
        [N, N, N, c * S, h(b), h(a), N, N],
        [N, N, N, N, N, N, S, N],
        [c ** 3 * S * S, b * c ** 2 * S * S, h(b * c ** 2) + b ** 2 * c * S, b * c * S * S,
         h(-a ** 2 * c) + b ** 2 * S, h(a * c), h(-a ** 2) + a * S, h(a)],
    ]
    s1, s2 = (0, 1), (1, 1)
    z = (s1, s2) * 3
    x = [(), (s2,), (s2, s1, s2), (s2, s1, s2, s1)]
    coset_words = tuple(x + [z + xi for xi in x])

    zero = LaurentPoly.constant(0, k)

    def vec(terms):
        v = [zero] * 24
        for j, coef in terms.items():
            v[j - 1] = v[j - 1] + coef  # paper labels b_1..b_24
        return _hecke_element(v)

    u = LaurentPoly.constant(1, k)
    ref = (
        vec({3: a * c ** 3, 5: a * c ** 3, 6: a * b * c ** 2 + c ** 3, 7: a * b * c ** 2 + c ** 3,
             8: b * c ** 2 + a * b ** 2 * c - a ** 2 * c ** 2, 9: a * c ** 2, 11: a * c ** 2,
             12: a * b * c + c ** 2, 14: 2 * b * c + a * b ** 2 - a ** 2 * c,
             18: c, 19: c, 20: b, 24: u}),
        vec({3: c ** 3, 6: b * c ** 2, 7: b * c ** 2, 8: b ** 2 * c, 12: b * c,
             14: -a * c + b ** 2, 17: c, 20: -a, 21: u, 23: u}),
        vec({14: c, 16: c, 19: -a, 20: u, 22: u}),
        vec({5: c ** 2, 8: -a * c, 9: c, 11: c, 14: -a, 15: u}),
        vec({13: u}),
        vec({2: c, 4: c, 7: -a, 8: u, 10: u}),
        vec({1: u}),
    )
    return GroupSpec(
        name="G4", k=k, families=(fam,), generator_family=(0, 0), distinguished=0,
        braid_relations=(((s1, s2, s1), (s2, s1, s2)),),
        coset_words=coset_words,
        rho=(tuple(map(tuple, rho1)), tuple(map(tuple, rho2))),
        group_order=24,
        class_reps={"default": (0, 9, 12, 14, 21, 22, 23)},
        pi_word=z * 2,
        central_words={"z": z},
        reference_center=ref,
        notes="sigma^3 = a sigma^2 + b sigma + c with a = u1+u2+u3, "
              "b = -(u1u2+u1u3+u2u3), c = u1u2u3; reference_center lists z1..z7.",
    )


# -- JSON -----------------------------------------------------------------

def _word_json(w):
    return [[g, ex] for g, ex in w]


def spec_to_json(spec):
    e = spec.e
    return {
        "name": spec.name,
        "k": spec.k,
        "variable_names": list(spec.variable_names),
        "families": [{"order": f.order, "parameters": list(f.parameters)} for f in spec.families],
        "generator_family": list(spec.generator_family),
        "distinguished": spec.distinguished,
        "group_order": spec.group_order,
        "e": e,
        "m": spec.m,
        "braid_relations": [[_word_json(l), _word_json(r)] for l, r in spec.braid_relations],
        "coset_words": [_word_json(w) for w in spec.coset_words],
        "rho": [[[None if x is None else x.to_json() for x in row] for row in M] for M in spec.rho],
        "class_reps": {n: list(v) for n, v in spec.class_reps.items()},
        "pi_word": _word_json(spec.pi_word) if spec.pi_word is not None else None,
        "central_words": {n: _word_json(w) for n, w in spec.central_words.items()},
        "reference_center": ([[x.to_json() for x in v.coeffs] for v in spec.reference_center]
                             if spec.reference_center else None),
        "basis_labels": list(spec.basis_labels) if spec.basis_labels else None,
        "representations": ([r.to_json() for r in spec.representations]
                            if spec.representations else None),
        "notes": spec.notes,
    }


def spec_from_json(data):
    k = data["k"]
    families = tuple(Family(f["order"], tuple(f["parameters"])) for f in data["families"])
    words = lambda ws: tuple(_norm_word(w) for w in ws)  # noqa: E731
    base = GroupSpec(name=data["name"], k=k, families=families,
                     generator_family=tuple(data["generator_family"]),
                     distinguished=data["distinguished"], braid_relations=(),
                     coset_words=((),), rho=(), group_order=data["group_order"])
    H = base.hprime
    if "e" in data and data["e"] != H.e:
        raise ValueError(f"declared e={data['e']} but sigma_0 has order {H.e}")

    def hp(x):
        if x is None:
            return None
        return H.element([LaurentPoly.from_json(p, k) for p in x])

    rho = tuple(tuple(tuple(hp(x) for x in row) for row in M) for M in data["rho"])
    ref = data.get("reference_center")
    reps = data.get("representations")
    return GroupSpec(
        name=data["name"], k=k, families=families,
        generator_family=tuple(data["generator_family"]),
        distinguished=data["distinguished"],
        braid_relations=tuple((_norm_word(l), _norm_word(r)) for l, r in data["braid_relations"]),
        coset_words=words(data["coset_words"]),
        rho=rho,
        group_order=data["group_order"],
        class_reps={n: tuple(v) for n, v in data.get("class_reps", {}).items()},
        pi_word=_norm_word(data["pi_word"]) if data.get("pi_word") is not None else None,
        central_words={n: _norm_word(w) for n, w in data.get("central_words", {}).items()},
        reference_center=(tuple(HeckeElement.from_json(v, k) for v in ref) if ref else None),
        basis_labels=tuple(data["basis_labels"]) if data.get("basis_labels") else None,
        variable_names=tuple(data["variable_names"]) if data.get("variable_names") else None,
        representations=(tuple(RepresentationData.from_json(r, k) for r in reps) if reps else None),
        notes=data.get("notes", ""),
    )


def dump_spec(spec, path):
    Path(path).write_text(json.dumps(spec_to_json(spec), indent=1) + "\n")


def load_spec(path):
    with open(path) as fh:
        return spec_from_json(json.load(fh))


def load_group(name_or_path):
    """Load a builtin group (``"a2"``, ``"g4"``) or a spec file path."""
    key = str(name_or_path).lower()
    if key in BUILTIN:
        text = resources.files("heckecenter").joinpath("groups", f"{key}.json").read_text()
        return spec_from_json(json.loads(text))
    p = Path(name_or_path)
    if not p.exists():
        raise FileNotFoundError(f"unknown group {name_or_path!r}: not a builtin and no such file")
    return load_spec(p)


if __name__ == "__main__":
    out = Path(__file__).parent / "groups"
    out.mkdir(exist_ok=True)
    for name, build in (("a2", build_a2), ("g4", build_g4)):
        dump_spec(build(), out / f"{name}.json")
        print(f"wrote {out / f'{name}.json'}")
