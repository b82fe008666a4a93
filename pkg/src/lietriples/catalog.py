"""The shipped catalog of triples and its on-disk descriptor format.

Entries are small recipes (which algebra, which involutions, which embedded
subalgebra, which generator list) that build into validated
TripleDescriptors.  Descriptor files are JSON with every rational serialized
as a "p/q" string, so no floating-point value can enter through parsing.

Conventions fixed here:
  * so(p, q) always uses the defining form J = diag(I_p, -I_q), and theta is
    conjugation by J.
  * the Lorentzian family embeds u(1, n) in so(2, 2n) by realification in
    interleaved coordinates (re_1, im_1, re_2, ...), where the defining forms
    literally agree; sigma is conjugation by diag(-1, 1, ..., 1), whose fixed
    subalgebra is the so(1, 2n) block.
  * the G2 entry embeds the split G2 matrices (which preserve
    diag(I_4, -I_3) by construction) in so(4, 3); sigma is conjugation by
    diag(1, 1, 1, 1, 1, -1, -1), fixing so(4, 1) + so(2).  Any other
    negative-definite 2-plane gives an equivalent descriptor, so this choice
    is a recorded convention, not extra data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import env2
from .env2 import Quad2, casimir
from .liealg import (
    KillingForm,
    LieAlgebra,
    direct_sum,
    g2_split,
    killing_form,
    restrict_form,
    sl,
    so,
    so_coordinates,
    su,
    subalgebra_on_own_basis,
    subspace_in_subalgebra_coords,
    u,
)
from .pairs import (
    Involution,
    TripleDescriptor,
    conjugation_involution,
    negative_transpose_involution,
    swap_involution,
)
from .ratlin import (
    RatMatrix,
    SubspaceBasis,
    signature,
    subspace_intersection,
)

SCHEMA_VERSION = 1

GENERATOR_NAMES = ("omega_l", "omega_l_cap_k", "omega_l_cap_s_cap_q")


class CatalogError(ValueError):
    """A descriptor failed to parse or validate."""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: dict
    sigma: dict
    theta: dict
    l: dict
    generators: tuple = GENERATOR_NAMES

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "name": self.name,
            "algebra": self.algebra,
            "sigma": self.sigma,
            "theta": self.theta,
            "l": self.l,
            "generators": list(self.generators),
        }


def _parse_vec(v: Sequence) -> list:
    return [Fraction(str(x)) for x in v]


# -- recipe interpreters ----------------------------------------------------


def _build_algebra(recipe: dict) -> LieAlgebra:
    kind = recipe.get("kind")
    if kind == "so":
        return so(int(recipe["p"]), int(recipe["q"]))
    if kind == "sl":
        return sl(int(recipe["n"]))
    if kind == "u":
        return u(int(recipe["p"]), int(recipe["q"]))
    if kind == "su":
        return su(int(recipe["p"]), int(recipe["q"]))
    if kind == "g2split":
        return g2_split()
    if kind == "direct_sum":
        factors = [_build_algebra(f) for f in recipe["factors"]]
        if len(factors) != 2:
            raise CatalogError("direct_sum wants exactly two factors")
        return direct_sum(factors[0], factors[1])
    raise CatalogError(f"unknown algebra recipe kind: {kind!r}")


def _build_involution(g: LieAlgebra, recipe: dict) -> Involution:
    kind = recipe.get("kind")
    if kind == "ad_diag":
        signs = [Fraction(str(s)) for s in recipe["signs"]]
        if g.matrices is None or g.matrices[0].rows != len(signs):
            raise CatalogError("ad_diag signs do not match the realization size")
        return conjugation_involution(g, RatMatrix.diagonal(signs))
    if kind == "swap_factors":
        return swap_involution(g)
    if kind == "neg_transpose":
        return negative_transpose_involution(g)
    if kind == "matrix":
        cols = [_parse_vec(c) for c in recipe["columns"]]
        return Involution(RatMatrix.from_columns(g.dim, cols))
    raise CatalogError(f"unknown involution recipe kind: {kind!r}")


def _build_l(g: LieAlgebra, recipe: dict) -> RatMatrix:
    """Frame matrix whose columns are the preferred ordered basis of l."""
    kind = recipe.get("kind")
    if kind == "first_factor":
        half = g.dim // 2
        cols = []
        for i in range(half):
            e = [Fraction(0)] * g.dim
            e[i] = Fraction(1)
            cols.append(e)
        return RatMatrix.from_columns(g.dim, cols)
    if kind == "u_realified":
        p_sig, q_sig = int(recipe["p"]), int(recipe["q"])
        lu = u(p_sig, q_sig)
        cols = [so_coordinates(2 * p_sig, 2 * q_sig, m) for m in lu.matrices]
        return RatMatrix.from_columns(g.dim, cols)
    if kind == "g2_in_so43":
        lg2 = g2_split()
        cols = [so_coordinates(4, 3, m) for m in lg2.matrices]
        return RatMatrix.from_columns(g.dim, cols)
    if kind == "explicit":
        cols = [_parse_vec(v) for v in recipe["vectors"]]
        return RatMatrix.from_columns(g.dim, cols)
    raise CatalogError(f"unknown l recipe kind: {kind!r}")


def _l_labels(g: LieAlgebra, recipe: dict) -> Optional[list]:
    kind = recipe.get("kind")
    if kind == "u_realified":
        lu = u(int(recipe["p"]), int(recipe["q"]))
        return list(lu.basis_labels)
    if kind == "g2_in_so43":
        return list(g2_split().basis_labels)
    if kind == "first_factor":
        return list(g.basis_labels[: g.dim // 2])
    return None


# -- built triples -----------------------------------------------------------


class BuiltTriple:
    """A catalog entry resolved into exact objects, computed lazily."""

    def __init__(self, entry: CatalogEntry):
        self.entry = entry
        self.g = _build_algebra(entry.algebra)
        sigma = _build_involution(self.g, entry.sigma)
        theta = _build_involution(self.g, entry.theta)
        frame = _build_l(self.g, entry.l)
        l_space = SubspaceBasis(self.g.dim, frame.transpose().entries)
        self.descriptor = TripleDescriptor(
            g=self.g,
            sigma=sigma,
            theta=theta,
            l=l_space,
            name=entry.name,
            l_frame=frame,
        )
        self._killing: Optional[KillingForm] = None
        self._l_alg: Optional[LieAlgebra] = None
        self._omega_g: Optional[Quad2] = None
        self._generators = None
        self._lh_l = None

    @property
    def killing(self) -> KillingForm:
        if self._killing is None:
            self._killing = killing_form(self.g)
        return self._killing

    @property
    def l_alg(self) -> LieAlgebra:
        if self._l_alg is None:
            frame = self.descriptor.l_frame
            labels = _l_labels(self.g, self.entry.l)
            self._l_alg, _ = subalgebra_on_own_basis(
                self.g, [frame.column(j) for j in range(frame.cols)], labels
            )
        return self._l_alg

    @property
    def frame(self) -> RatMatrix:
        return self.descriptor.l_frame

    def _to_l(self, space_ambient: SubspaceBasis) -> SubspaceBasis:
        return subspace_in_subalgebra_coords(self.frame, space_ambient)

    @property
    def l_cap_h(self) -> SubspaceBasis:
        if self._lh_l is None:
            self._lh_l = self._to_l(
                subspace_intersection(self.descriptor.l, self.descriptor.h)
            )
        return self._lh_l

    @property
    def omega_g(self) -> Quad2:
        if self._omega_g is None:
            full = SubspaceBasis.full(self.g.dim)
            self._omega_g = casimir(self.g, full, self.killing.gram)
        return self._omega_g

    def killing_on_l(self) -> RatMatrix:
        f = self.frame
        return f.transpose() @ self.killing.gram @ f

    def generator_subspace(self, name: str) -> SubspaceBasis:
        """The subspace of l (in l-coordinates) normalizing each generator."""
        d = self.descriptor
        if name == "omega_l":
            return SubspaceBasis.full(self.l_alg.dim)
        if name == "omega_l_cap_k":
            return self._to_l(subspace_intersection(d.l, d.k))
        if name == "omega_l_cap_s_cap_q":
            lsq = subspace_intersection(subspace_intersection(d.l, d.s), d.q)
            return self._to_l(lsq)
        raise CatalogError(f"unknown generator name: {name!r}")

    def twisted_killing_on_l(self) -> RatMatrix:
        """Gram of B(X, theta Y) on the l frame, in l-coordinates.

        This form agrees with the Killing form on compact directions (theta
        fixes them) and is its negative on s-directions, so it is negative
        definite wherever we use it.  It normalizes the auxiliary generators
        below; the plain restriction would flip the sign of the mixed
        subspace generator.
        """
        f = self.frame
        return f.transpose() @ self.killing.gram @ self.descriptor.theta.matrix @ f

    @property
    def generators(self) -> list:
        """[(name, Quad2 over l)] normalized per the catalog convention.

        omega_l uses the ambient Killing form restricted to l.  The two
        auxiliary generators use the theta-twisted form B(X, theta Y): on
        l cap k this equals the restricted Killing form, and on the mixed
        subspace l cap s cap q it is the negative of it.
        """
        if self._generators is None:
            b_l = self.killing_on_l()
            b_twist = self.twisted_killing_on_l()
            out = []
            for name in self.entry.generators:
                sub = self.generator_subspace(name)
                form = restrict_form(b_l if name == "omega_l" else b_twist, sub)
                out.append((name, casimir(self.l_alg, sub, form)))
            self._generators = out
        return self._generators

    def iota_of_casimir(self, complement_seed: Optional[int] = None) -> Quad2:
        return env2.iota_embed(
            self.descriptor,
            self.omega_g,
            l_alg=self.l_alg,
            complement_seed=complement_seed,
        )

    def embedding_report(self) -> dict:
        """Coefficients of iota(Omega_G) over the generator list, plus checks."""
        image = self.iota_of_casimir()
        gens = self.generators
        coeffs = env2.decompose_in_span(
            image, [q for _, q in gens], self.l_cap_h
        )
        residual_zero = False
        if coeffs is not None:
            combo = Quad2.zero(self.l_alg)
            for c, (_, gen) in zip(coeffs, gens):
                combo = combo + gen.scale(c)
            residual_zero = env2.equals_mod_ideal(image, combo, self.l_cap_h)
        return {
            "generators": [name for name, _ in gens],
            "coefficients": None if coeffs is None else [Fraction(c) for c in coeffs],
            "residual_zero": residual_zero,
        }

    def triple_evidence(self) -> dict:
        """Auditable extras for the triples-check command."""
        d = self.descriptor
        lh = subspace_intersection(d.l, d.h)
        sig_l = signature(restrict_form(self.killing, d.l))
        sig_lh = (
            signature(restrict_form(self.killing, lh)) if lh.dim else (0, 0, 0)
        )
        return {
            "dim_q": d.q.dim,
            "dim_k": d.k.dim,
            "dim_s": d.s.dim,
            "signature_on_l": list(sig_l),
            "signature_on_l_cap_h": list(sig_lh),
        }

    def embedding_evidence(self) -> dict:
        """Auditable extras for the embedding command."""
        d = self.descriptor
        gen_dims = {
            name: self.generator_subspace(name).dim for name in self.entry.generators
        }
        b_l = self.killing_on_l()
        b_twist = self.twisted_killing_on_l()
        sym_equal = True
        for name in self.entry.generators:
            sub = self.generator_subspace(name)
            if sub.dim == 0:
                continue
            form = restrict_form(b_l if name == "omega_l" else b_twist, sub)
            plain = casimir(self.l_alg, sub, form)
            sym = env2.symmetrized_casimir(self.l_alg, sub, form)
            if plain != sym:
                sym_equal = False
        image = self.iota_of_casimir()
        image_terms = []
        labels = self.l_alg.basis_labels
        for (i, j), c in sorted(image.quad.items()):
            image_terms.append([f"{labels[i]}.{labels[j]}", str(c)])
        for i, c in sorted(image.lin.items()):
            image_terms.append([labels[i], str(c)])
        if image.const != 0:
            image_terms.append(["1", str(image.const)])
        return {
            "dim_g": self.g.dim,
            "dim_l": d.l.dim,
            "dim_h": d.h.dim,
            "dim_complement": self.g.dim - d.l.dim,
            "h_invariance_checks": d.h.dim,
            "generator_dims": gen_dims,
            "symmetrized_variant_equal": sym_equal,
            "canonical_image": image_terms,
        }

    def validate(self) -> None:
        """Catalog-level invariants beyond the bare descriptor checks."""
        d = self.descriptor
        d.validate()
        k = d.k
        s = d.s
        b = self.killing
        if k.dim and signature(restrict_form(b, k)) != (0, k.dim, 0):
            raise CatalogError(f"{self.entry.name}: fix(theta) is not compact")
        if s.dim and signature(restrict_form(b, s)) != (s.dim, 0, 0):
            raise CatalogError(
                f"{self.entry.name}: theta minus-space is not positive definite"
            )
        # theta must preserve l so l inherits a Cartan split
        for j in range(self.frame.cols):
            if not d.l.contains(d.theta.apply(self.frame.column(j))):
                raise CatalogError(f"{self.entry.name}: theta does not preserve l")


# -- shipped entries ----------------------------------------------------------


def _group_entry() -> CatalogEntry:
    return CatalogEntry(
        name="group",
        algebra={
            "kind": "direct_sum",
            "factors": [{"kind": "sl", "n": 2}, {"kind": "sl", "n": 2}],
        },
        sigma={"kind": "swap_factors"},
        theta={"kind": "neg_transpose"},
        l={"kind": "first_factor"},
    )


def _group_compact_entry() -> CatalogEntry:
    # l = sl(2) in the first factor plus so(2) = span(E - F) in the second;
    # ambient coordinates are (H, E, F)_1 then (H, E, F)_2.
    vectors = [
        ["1", "0", "0", "0", "0", "0"],
        ["0", "1", "0", "0", "0", "0"],
        ["0", "0", "1", "0", "0", "0"],
        ["0", "0", "0", "0", "1", "-1"],
    ]
    return CatalogEntry(
        name="group-compact",
        algebra={
            "kind": "direct_sum",
            "factors": [{"kind": "sl", "n": 2}, {"kind": "sl", "n": 2}],
        },
        sigma={"kind": "swap_factors"},
        theta={"kind": "neg_transpose"},
        l={"kind": "explicit", "vectors": vectors},
    )


def _lorentzian_entry(n: int) -> CatalogEntry:
    size = 2 + 2 * n
    return CatalogEntry(
        name=f"lorentzian-{n}",
        algebra={"kind": "so", "p": 2, "q": 2 * n},
        sigma={"kind": "ad_diag", "signs": ["-1"] + ["1"] * (size - 1)},
        theta={"kind": "ad_diag", "signs": ["1", "1"] + ["-1"] * (2 * n)},
        l={"kind": "u_realified", "p": 1, "q": n},
    )


def _g2_entry() -> CatalogEntry:
    return CatalogEntry(
        name="g2",
        algebra={"kind": "so", "p": 4, "q": 3},
        sigma={"kind": "ad_diag", "signs": ["1", "1", "1", "1", "1", "-1", "-1"]},
        theta={"kind": "ad_diag", "signs": ["1", "1", "1", "1", "-1", "-1", "-1"]},
        l={"kind": "g2_in_so43"},
    )


def builtin_entries() -> dict:
    entries = [
        _group_entry(),
        _group_compact_entry(),
        _lorentzian_entry(2),
        _lorentzian_entry(3),
        _g2_entry(),
    ]
    return {e.name: e for e in entries}


_BUILT_CACHE: dict = {}


def build(entry: CatalogEntry) -> BuiltTriple:
    key = canonical_json(entry.to_json_dict())
    if key not in _BUILT_CACHE:
        _BUILT_CACHE[key] = BuiltTriple(entry)
    return _BUILT_CACHE[key]


def get(name: str, extra: Optional[dict] = None) -> BuiltTriple:
    entries = builtin_entries()
    if extra:
        entries.update(extra)
    if name not in entries:
        known = ", ".join(sorted(entries))
        raise CatalogError(f"unknown catalog entry {name!r} (known: {known})")
    return build(entries[name])


# -- on-disk format -----------------------------------------------------------


def canonical_json(obj) -> str:
    """The one JSON rendering used everywhere (machine output, caching)."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def entry_from_json_dict(data: dict, where: str = "<entry>") -> CatalogEntry:
    if not isinstance(data, dict):
        raise CatalogError(f"{where}: entry must be an object")
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise CatalogError(
            f"{where}: unsupported schema_version {version!r} (want {SCHEMA_VERSION})"
        )
    for field in ("name", "algebra", "sigma", "theta", "l"):
        if field not in data:
            raise CatalogError(f"{where}: missing field {field!r}")
    generators = tuple(data.get("generators", GENERATOR_NAMES))
    for gname in generators:
        if gname not in GENERATOR_NAMES:
            raise CatalogError(f"{where}: unknown generator {gname!r}")
    return CatalogEntry(
        name=str(data["name"]),
        algebra=data["algebra"],
        sigma=data["sigma"],
        theta=data["theta"],
        l=data["l"],
        generators=generators,
    )


def load_entries(path: str) -> dict:
    """Load {name: CatalogEntry} from a JSON descriptor file.

    The file holds either one entry object or {"entries": [...]}; JSON parse
    errors are re-raised with line/column diagnostics.
    """
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise CatalogError(f"{path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(
            f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}"
        ) from exc
    if isinstance(data, dict) and "entries" in data:
        items = data["entries"]
        if not isinstance(items, list):
            raise CatalogError(f"{path}: 'entries' must be a list")
        out = {}
        for idx, item in enumerate(items):
            entry = entry_from_json_dict(item, where=f"{path}#entries[{idx}]")
            out[entry.name] = entry
        return out
    entry = entry_from_json_dict(data, where=path)
    return {entry.name: entry}
