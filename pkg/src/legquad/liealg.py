"""Finite-dimensional Lie algebras spanned by the quadrics of an ideal.

Everything is exact.  The main pipeline: take the degree-2 part of a
variety's ideal, verify the span is bracket-closed, solve for structure
constants, find a torus of elements whose sp-images are diagonal, decompose
into root spaces over the rationals and match the Dynkin graph.

Some fixtures present a rational form that admits no split Cartan (sums of
squares cut out quadrics without rational points).  Those take a fallback
path: split into minimal ideals and identify each factor by its dimension
and rank, which determines the complex type except for the B/C collision in
rank 3 and above, reported as a hard error if ever hit.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .linalg import Matrix, Vector
from .poly import Polynomial, grevlex_key
from .symplectic import SymplecticForm

StructureConstants = Dict[Tuple[int, int], Dict[int, Fraction]]


class NotClosedError(ValueError):
    """The quadric span is not closed under the Poisson bracket."""

    def __init__(self, i: int, j: int):
        super().__init__(f"bracket of basis elements {i} and {j} leaves the span")
        self.pair = (i, j)


class NotAdaptedError(ValueError):
    """The presentation basis does not split over the rationals."""


class SpanSolver:
    """Echelonized span with coefficient recovery against the original rows.

    Rows are sparse dicts keyed by arbitrary orderable keys.  reduce() writes
    a vector as a combination of the original rows plus a residual.
    """

    def __init__(self, key_order):
        # key_order: monomial sort key; pivots are eliminated largest first.
        self.key_order = key_order
        self.rows: List[Dict] = []
        self.combos: List[Dict[int, Fraction]] = []
        self.pivots: Dict = {}
        self.n_input = 0

    def _leading(self, vec: Dict):
        return max(vec, key=self.key_order)

    def add_row(self, vec: Dict) -> bool:
        """Insert one input row; returns False when dependent on earlier rows."""
        combo = {self.n_input: Fraction(1)}
        self.n_input += 1
        residual, coeffs = self._eliminate(dict(vec))
        if not residual:
            return False
        for idx, c in coeffs.items():
            for orig, w in self.combos[idx].items():
                combo[orig] = combo.get(orig, Fraction(0)) - c * w
        lead = self._leading(residual)
        scale = 1 / residual[lead]
        residual = {k: v * scale for k, v in residual.items()}
        combo = {k: v * scale for k, v in combo.items() if v * scale != 0}
        self.pivots[lead] = len(self.rows)
        self.rows.append(residual)
        self.combos.append(combo)
        return True

    def _eliminate(self, work: Dict) -> Tuple[Dict, Dict[int, Fraction]]:
        coeffs: Dict[int, Fraction] = {}
        order = sorted(self.pivots, key=self.key_order, reverse=True)
        for pivot in order:
            if pivot in work:
                idx = self.pivots[pivot]
                factor = work[pivot]
                coeffs[idx] = coeffs.get(idx, Fraction(0)) + factor
                for k, v in self.rows[idx].items():
                    s = work.get(k, Fraction(0)) - factor * v
                    if s:
                        work[k] = s
                    else:
                        work.pop(k, None)
        return work, coeffs

    def reduce(self, vec: Dict) -> Tuple[Optional[Vector], Dict]:
        """Coefficients over the original input rows, or None with residual."""
        residual, coeffs = self._eliminate(dict(vec))
        combo = [Fraction(0)] * self.n_input
        for idx, c in coeffs.items():
            for orig, w in self.combos[idx].items():
                combo[orig] += c * w
        if residual:
            return None, residual
        return combo, {}

    @property
    def rank(self) -> int:
        return len(self.rows)


def _gradient_entries(p: Polynomial):
    """Sparse gradient of a quadric as (variable, monomial, coefficient)."""
    entries = []
    for i in range(p.nvars):
        d = p.partial_derivative(i)
        for m, c in d.terms.items():
            entries.append((i, m, c))
    return entries


def _fast_bracket(grad_f, grad_g_by_var, dual_rows, nvars: int) -> Dict:
    out: Dict = {}
    for i, m1, c1 in grad_f:
        for j, w in dual_rows[i]:
            for m2, c2 in grad_g_by_var.get(j, ()):
                key = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(key, Fraction(0)) + c1 * c2 * w
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return out


class LieAlgebraPresentation:
    """Basis of quadrics plus exact structure constants for their brackets."""

    def __init__(
        self,
        basis: Sequence[Polynomial],
        form: SymplecticForm,
        structure: StructureConstants,
    ):
        self.basis = list(basis)
        self.form = form
        self.structure = structure
        self.dim = len(self.basis)
        self._sp_images: Optional[List[Matrix]] = None

    def bracket_coeffs(self, i: int, j: int) -> Dict[int, Fraction]:
        """[b_i, b_j] as a sparse coefficient vector over the basis."""
        if i == j:
            return {}
        if i < j:
            return dict(self.structure.get((i, j), {}))
        return {k: -v for k, v in self.structure.get((j, i), {}).items()}

    def bracket_vectors(self, u: Sequence, v: Sequence) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = {}
        ui = [(i, Fraction(x)) for i, x in enumerate(u) if x]
        vj = [(j, Fraction(x)) for j, x in enumerate(v) if x]
        for i, uc in ui:
            for j, vc in vj:
                if i == j:
                    continue
                for k, c in self.bracket_coeffs(i, j).items():
                    s = out.get(k, Fraction(0)) + uc * vc * c
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def ad_matrix(self, vec: Sequence) -> Matrix:
        """Matrix of ad(v) acting on basis coordinates."""
        cols = []
        for j in range(self.dim):
            col = self.bracket_vectors(vec, _unit(self.dim, j))
            cols.append(col)
        out = linalg.zeros(self.dim, self.dim)
        for j, col in enumerate(cols):
            for k, c in col.items():
                out[k][j] = c
        return out

    def sp_images(self) -> List[Matrix]:
        # Sparse build of 2 W A per basis quadric; the dual matrix and the
        # quadric matrices are both sparse for every fixture.
        if self._sp_images is None:
            dim2n = self.form.dim
            dual = self.form.dual_matrix
            col_nonzeros = [
                [(p, dual[p][r]) for p in range(dim2n) if dual[p][r] != 0]
                for r in range(dim2n)
            ]
            images = []
            for b in self.basis:
                image = linalg.zeros(dim2n, dim2n)
                for exps, coeff in b.terms.items():
                    support = [i for i, e in enumerate(exps) if e]
                    if len(support) == 1:
                        entries = [(support[0], support[0], coeff)]
                    else:
                        r, q = support
                        entries = [(r, q, coeff / 2), (q, r, coeff / 2)]
                    for r, q, a in entries:
                        for p, w in col_nonzeros[r]:
                            image[p][q] += 2 * w * a
                images.append(image)
            self._sp_images = images
        return self._sp_images

    def element_polynomial(self, vec: Sequence) -> Polynomial:
        total = Polynomial.zero(self.form.dim)
        for i, c in enumerate(vec):
            if c:
                total = total + self.basis[i].scale(c)
        return total

    def killing_matrix(self) -> Matrix:
        """Trace form of the adjoint action, computed from structure constants."""
        ads = []
        for i in range(self.dim):
            ad_i: Dict[int, Dict[int, Fraction]] = {}
            for k in range(self.dim):
                col = self.bracket_coeffs(i, k)
                if col:
                    ad_i[k] = col
            ads.append(ad_i)
        kappa = linalg.zeros(self.dim, self.dim)
        for i in range(self.dim):
            for j in range(i, self.dim):
                total = Fraction(0)
                for k, col in ads[i].items():
                    back = ads[j]
                    for l, c in col.items():
                        if l in back:
                            total += c * back[l].get(k, Fraction(0))
                kappa[i][j] = total
                kappa[j][i] = total
        return kappa

    def is_semisimple(self) -> bool:
        return linalg.det(self.killing_matrix()) != 0

    def verify_jacobi(self, max_triples: Optional[int] = None) -> bool:
        """Jacobi identity on basis triples; optionally a deterministic sample."""
        triples = list(itertools.combinations(range(self.dim), 3))
        if max_triples is not None and len(triples) > max_triples:
            step = max(1, len(triples) // max_triples)
            triples = triples[::step][:max_triples]
        for i, j, k in triples:
            total: Dict[int, Fraction] = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                inner = self.bracket_coeffs(b, c)
                outer = self.bracket_vectors(_unit(self.dim, a), inner_to_vec(inner, self.dim))
                for l, v in outer.items():
                    s = total.get(l, Fraction(0)) + v
                    if s:
                        total[l] = s
                    else:
                        total.pop(l, None)
            if total:
                return False
        return True


def inner_to_vec(coeffs: Dict[int, Fraction], dim: int) -> Vector:
    v = [Fraction(0)] * dim
    for k, c in coeffs.items():
        v[k] = c
    return v


def _unit(dim: int, i: int) -> Vector:
    v = [Fraction(0)] * dim
    v[i] = Fraction(1)
    return v


def quadratic_part(generators: Sequence[Polynomial], nvars: int) -> List[Polynomial]:
    """Canonical basis (row reduction) of the span of the degree-2 generators."""
    solver = SpanSolver(grevlex_key)
    kept = []
    for g in generators:
        if g.is_zero():
            continue
        if g.homogeneous_degree() == 2:
            if solver.add_row(dict(g.terms)):
                kept.append(g)
    # Return the echelonized representatives for determinism.
    return [Polynomial(nvars, row) for row in solver.rows]


def close_and_present(quadrics: Sequence[Polynomial], form: SymplecticForm) -> LieAlgebraPresentation:
    """Verify bracket closure of the span and solve exact structure constants.

    Raises NotClosedError naming the first offending pair otherwise.
    """
    basis = list(quadrics)
    if not basis:
        return LieAlgebraPresentation([], form, {})
    nvars = form.dim
    solver = SpanSolver(grevlex_key)
    for q in basis:
        if q.nvars != nvars:
            raise ValueError("quadric does not match the form dimension")
        if not solver.add_row(dict(q.terms)):
            raise ValueError("quadrics must be linearly independent")

    dual = form.dual_matrix
    dual_rows = [
        [(j, w) for j, w in enumerate(row) if w != 0]
        for row in dual
    ]
    grads = [_gradient_entries(q) for q in basis]
    grads_by_var = []
    for entries in grads:
        by_var: Dict[int, list] = {}
        for i, m, c in entries:
            by_var.setdefault(i, []).append((m, c))
        grads_by_var.append(by_var)

    structure: StructureConstants = {}
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            br = _fast_bracket(grads[i], grads_by_var[j], dual_rows, nvars)
            if not br:
                continue
            coeffs, residual = solver.reduce(br)
            if coeffs is None:
                raise NotClosedError(i, j)
            entry = {k: c for k, c in enumerate(coeffs) if c}
            if entry:
                structure[(i, j)] = entry
    return LieAlgebraPresentation(basis, form, structure)


# ---------------------------------------------------------------------------
# Cartan subalgebras and root decompositions.
# ---------------------------------------------------------------------------


@dataclass
class CartanData:
    """A torus of the algebra together with its root decomposition.

    cartan_vectors are coordinate vectors over the algebra basis; when every
    torus generator is itself a basis element, cartan_basis_indices lists
    them.  root_spaces pairs each root vector (eigenvalues against the torus
    basis) with a coordinate eigenvector.
    """

    cartan_vectors: List[Vector]
    cartan_basis_indices: Optional[List[int]] = None
    root_spaces: List[Tuple[Vector, Vector]] = field(default_factory=list)  # (root, eigvec)
    killing: Optional[Matrix] = None

    @property
    def rank(self) -> int:
        return len(self.cartan_vectors)

    @property
    def roots(self) -> List[Vector]:
        return [r for r, _ in self.root_spaces]


def _diagonal_candidates(algebra: LieAlgebraPresentation) -> List[int]:
    out = []
    for idx, image in enumerate(algebra.sp_images()):
        if all(image[p][q] == 0 for p in range(len(image)) for q in range(len(image)) if p != q):
            out.append(idx)
    return out


def _centralizer(algebra: LieAlgebraPresentation, vectors: List[Vector]) -> List[Vector]:
    """Basis of {v : [v, h] = 0 for all h in vectors}."""
    if not vectors:
        return [list(r) for r in linalg.identity(algebra.dim)]
    if len(vectors) > 1:
        # One generic combination usually pins the joint centralizer; verify
        # and fall back to the stacked kernel when it does not.
        generic = [Fraction(0)] * algebra.dim
        for a, h in enumerate(vectors):
            for i, x in enumerate(h):
                generic[i] += (a + 1) * x
        kernel = linalg.nullspace(algebra.ad_matrix(generic), algebra.dim)
        if all(
            not algebra.bracket_vectors(v, h) for v in kernel for h in vectors
        ):
            return kernel
    rows: List[Vector] = []
    for h in vectors:
        ad_h = algebra.ad_matrix(h)
        # [v, h] = -ad_h v; kernel rows of ad_h.
        rows.extend(ad_h)
    return linalg.nullspace(rows, algebra.dim)


def cartan_subalgebra(algebra: LieAlgebraPresentation) -> CartanData:
    """A maximal torus of elements whose sp-images are diagonal.

    Falls back to the centralizer of a deterministic generic element when no
    diagonal candidates exist.  Raises NotAdaptedError when neither route
    produces a self-centralizing abelian subalgebra.
    """
    if algebra.dim == 0:
        return CartanData([])
    candidates = _diagonal_candidates(algebra)
    if candidates:
        vectors = [_unit(algebra.dim, i) for i in candidates]
        central = _centralizer(algebra, vectors)
        if len(central) == len(vectors):
            return CartanData(vectors, cartan_basis_indices=candidates)
        # Widen within the centralizer: keep those with diagonal images.
        widened = _diagonal_subspace(algebra, central)
        central2 = _centralizer(algebra, widened)
        if len(central2) == len(widened):
            indices = _indices_if_units(widened)
            return CartanData(widened, cartan_basis_indices=indices)
    for seed in (1, 3, 7):
        generic = [Fraction((seed * (i + 1)) % (algebra.dim + 2) + 1) for i in range(algebra.dim)]
        central = _centralizer(algebra, [generic])
        if _is_abelian(algebra, central):
            central2 = _centralizer(algebra, central)
            if len(central2) == len(central):
                return CartanData(central, cartan_basis_indices=_indices_if_units(central))
    raise NotAdaptedError("no self-centralizing torus found; basis not adapted")


def _indices_if_units(vectors: List[Vector]) -> Optional[List[int]]:
    indices = []
    for v in vectors:
        support = [i for i, x in enumerate(v) if x]
        if len(support) != 1 or v[support[0]] != 1:
            return None
        indices.append(support[0])
    return indices


def _diagonal_subspace(algebra: LieAlgebraPresentation, within: List[Vector]) -> List[Vector]:
    """Sub-basis of `within` whose sp-images are diagonal."""
    images = algebra.sp_images()
    dim2n = algebra.form.dim
    rows = []
    for v in within:
        combined = linalg.zeros(dim2n, dim2n)
        for i, c in enumerate(v):
            if c:
                combined = linalg.mat_add(combined, linalg.mat_scale(images[i], c))
        rows.append(combined)
    constraints = []
    for p in range(dim2n):
        for q in range(dim2n):
            if p == q:
                continue
            row = [rows[a][p][q] for a in range(len(within))]
            if any(x != 0 for x in row):
                constraints.append(row)
    if not constraints:
        coeff_basis = [list(r) for r in linalg.identity(len(within))]
    else:
        coeff_basis = linalg.nullspace(constraints, len(within))
    out = []
    for coeffs in coeff_basis:
        vec = [Fraction(0)] * algebra.dim
        for a, c in enumerate(coeffs):
            if c:
                for i, x in enumerate(within[a]):
                    vec[i] += c * x
        out.append(vec)
    return out


def _is_abelian(algebra: LieAlgebraPresentation, vectors: List[Vector]) -> bool:
    for a in range(len(vectors)):
        for b in range(a + 1, len(vectors)):
            if algebra.bracket_vectors(vectors[a], vectors[b]):
                return False
    return True


def root_decomposition(algebra: LieAlgebraPresentation, cartan: CartanData) -> CartanData:
    """Simultaneous ad-eigendecomposition over the rationals.

    Raises NotAdaptedError when the torus does not act diagonalizably with
    rational eigenvalues on the presentation basis.
    """
    r = cartan.rank
    ad_mats = [algebra.ad_matrix(h) for h in cartan.cartan_vectors]

    # Fast path: basis elements that are already joint eigenvectors.
    root_spaces: List[Tuple[Vector, Vector]] = []
    leftover: List[int] = []
    zero_count = 0
    for j in range(algebra.dim):
        root: Vector = []
        ok = True
        for ad_h in ad_mats:
            col = [ad_h[k][j] for k in range(algebra.dim)]
            support = [k for k, x in enumerate(col) if x]
            if not support:
                root.append(Fraction(0))
            elif support == [j]:
                root.append(col[j])
            else:
                ok = False
                break
        if not ok:
            leftover.append(j)
        elif any(root):
            root_spaces.append((root, _unit(algebra.dim, j)))
        else:
            zero_count += 1

    if leftover:
        extra = _split_leftover(algebra, cartan, ad_mats, leftover)
        for root, vec in extra:
            if any(root):
                root_spaces.append((root, vec))
            else:
                zero_count += 1

    if zero_count != r or len(root_spaces) + r != algebra.dim:
        raise NotAdaptedError(
            f"root decomposition does not exhaust the algebra "
            f"(rank {r}, zero eigenspace {zero_count}, roots {len(root_spaces)})"
        )

    killing = linalg.zeros(r, r)
    for root, _ in root_spaces:
        for a in range(r):
            if root[a] == 0:
                continue
            for b in range(r):
                killing[a][b] += root[a] * root[b]
    return CartanData(
        cartan.cartan_vectors,
        cartan_basis_indices=cartan.cartan_basis_indices,
        root_spaces=sorted(root_spaces, key=lambda rv: tuple(rv[0]), reverse=True),
        killing=killing,
    )


def _split_leftover(algebra, cartan, ad_mats, leftover):
    """Joint eigenvectors inside the span of the leftover basis indices.

    Candidate eigenvalues come from the diagonal sp-image entries of the
    torus: the adjoint eigenvalues on quadrics are sums of pairs of weights.
    """
    images = algebra.sp_images()
    spaces = [[_unit(algebra.dim, j) for j in leftover]]
    for a, h in enumerate(cartan.cartan_vectors):
        rho = linalg.zeros(algebra.form.dim, algebra.form.dim)
        for i, c in enumerate(h):
            if c:
                rho = linalg.mat_add(rho, linalg.mat_scale(images[i], c))
        weights = [rho[p][p] for p in range(algebra.form.dim)]
        candidates = sorted({wp + wq for wp in weights for wq in weights})
        new_spaces = []
        for space in spaces:
            new_spaces.extend(_split_by_eigenvalue(algebra, ad_mats[a], space, candidates))
        spaces = new_spaces
    out = []
    for space in spaces:
        for vec in space:
            root = []
            for ad_h in ad_mats:
                image = linalg.mat_vec(ad_h, vec)
                lam = _eigen_ratio(image, vec)
                if lam is None:
                    raise NotAdaptedError("torus action is not rationally diagonalizable")
                root.append(lam)
            out.append((root, vec))
    return out


def _split_by_eigenvalue(algebra, ad_h, space, candidates):
    if not space:
        return []
    span_rows = [list(v) for v in space]
    pieces = []
    found = 0
    for lam in candidates:
        shifted = []
        for v in space:
            image = linalg.mat_vec(ad_h, v)
            shifted.append([x - lam * y for x, y in zip(image, v)])
        kernel_coeffs = linalg.nullspace(linalg.transpose(shifted), len(space))
        if kernel_coeffs:
            vecs = []
            for coeffs in kernel_coeffs:
                vec = [Fraction(0)] * algebra.dim
                for a, c in enumerate(coeffs):
                    for i, x in enumerate(space[a]):
                        vec[i] += c * x
                vecs.append(vec)
            pieces.append(vecs)
            found += len(vecs)
    if found != len(space):
        raise NotAdaptedError("torus action is not rationally diagonalizable")
    return pieces


def _eigen_ratio(image: Vector, vec: Vector) -> Optional[Fraction]:
    lam = None
    for x, y in zip(image, vec):
        if y == 0:
            if x != 0:
                return None
            continue
        ratio = Fraction(x) / Fraction(y)
        if lam is None:
            lam = ratio
        elif ratio != lam:
            return None
    return lam if lam is not None else Fraction(0)


# ---------------------------------------------------------------------------
# Dynkin identification.
# ---------------------------------------------------------------------------


class NonCrystallographicError(ValueError):
    """Cartan integers outside the crystallographic range: upstream bug."""


def identify_type(cd: CartanData) -> List[str]:
    """Simple-type labels of the semisimple algebra from its root data."""
    roots = cd.roots
    if not roots:
        return []
    if cd.killing is None:
        raise ValueError("root_decomposition must run first")
    gram_inv = linalg.inverse(cd.killing)

    def inner(a: Vector, b: Vector) -> Fraction:
        return linalg.vec_dot(a, linalg.mat_vec(gram_inv, b))

    positive = [r for r in roots if _lex_positive(r)]
    positive_set = {tuple(r) for r in positive}
    simple = []
    for alpha in positive:
        decomposable = False
        ta = tuple(alpha)
        for beta in positive:
            tb = tuple(beta)
            if tb == ta:
                continue
            gamma = tuple(x - y for x, y in zip(alpha, beta))
            if gamma in positive_set:
                decomposable = True
                break
        if not decomposable:
            simple.append(alpha)
    m = len(simple)
    cartan_matrix = linalg.zeros(m, m)
    for a in range(m):
        for b in range(m):
            num = 2 * inner(simple[a], simple[b])
            den = inner(simple[b], simple[b])
            val = num / den
            if val.denominator != 1:
                raise NonCrystallographicError(f"Cartan entry {val} is not an integer")
            cartan_matrix[a][b] = val
            if a == b and val != 2:
                raise NonCrystallographicError("diagonal Cartan entry differs from 2")
            if a != b and val > 0:
                raise NonCrystallographicError("positive off-diagonal Cartan entry")
    lengths = [inner(s, s) for s in simple]
    return _labels_from_cartan_matrix(cartan_matrix, lengths)


def _lex_positive(v: Vector) -> bool:
    for x in v:
        if x != 0:
            return x > 0
    return False


def _labels_from_cartan_matrix(cartan: Matrix, lengths: List[Fraction]) -> List[str]:
    m = len(cartan)
    bond = {}
    adj = {i: set() for i in range(m)}
    for i in range(m):
        for j in range(i + 1, m):
            mult = int(cartan[i][j] * cartan[j][i])
            if mult not in (0, 1, 2, 3):
                raise NonCrystallographicError(f"bond multiplicity {mult}")
            if mult:
                adj[i].add(j)
                adj[j].add(i)
                bond[(i, j)] = bond[(j, i)] = mult
    labels = []
    seen = set()
    for start in range(m):
        if start in seen:
            continue
        component = _connected_component(adj, start)
        seen |= component
        labels.append(_label_component(sorted(component), adj, bond, lengths))
    return sorted(labels, key=lambda s: (s[0], int(s[1:])))


def _connected_component(adj, start):
    stack, seen = [start], {start}
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _label_component(nodes, adj, bond, lengths) -> str:
    m = len(nodes)
    if m == 1:
        return "A1"
    edges = [(i, j) for i in nodes for j in adj[i] if i < j and j in nodes]
    multiplicities = sorted(bond[e] for e in edges)
    degrees = {i: len(adj[i] & set(nodes)) for i in nodes}
    if 3 in multiplicities:
        if m != 2:
            raise NonCrystallographicError("triple bond in a component of rank > 2")
        return "G2"
    doubles = [e for e in edges if bond[e] == 2]
    if len(doubles) > 1:
        raise NonCrystallographicError("more than one double bond in a component")
    if not doubles:
        branch = [i for i in nodes if degrees[i] == 3]
        if not branch:
            return f"A{m}"
        if len(branch) > 1 or any(degrees[i] > 3 for i in nodes):
            raise NonCrystallographicError("unrecognized simply-laced branching")
        arms = sorted(_arm_lengths(branch[0], nodes, adj))
        if arms[0] == 1 and arms[1] == 1:
            return f"D{m}"
        if arms == [1, 2, 2]:
            return "E6"
        if arms == [1, 2, 3]:
            return "E7"
        if arms == [1, 2, 4]:
            return "E8"
        raise NonCrystallographicError(f"unrecognized branch arms {arms}")
    if any(degrees[i] > 2 for i in nodes):
        raise NonCrystallographicError("double bond with branching")
    if m == 2:
        return "B2"
    u, v = doubles[0]
    end_nodes = [i for i in nodes if degrees[i] == 1]
    double_ends = [x for x in (u, v) if x in end_nodes]
    if not double_ends:
        if m == 4:
            return "F4"
        raise NonCrystallographicError("interior double bond in a chain of rank != 4")
    end = double_ends[0]
    other = v if end == u else u
    return f"B{m}" if lengths[end] < lengths[other] else f"C{m}"


def _arm_lengths(branch, nodes, adj):
    arms = []
    for first in adj[branch] & set(nodes):
        length = 1
        prev, cur = branch, first
        while True:
            nxt = [w for w in adj[cur] & set(nodes) if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return arms


# ---------------------------------------------------------------------------
# Ideal decomposition and the non-split fallback.
# ---------------------------------------------------------------------------

# (dimension, rank) -> complex simple type; B/C collide from rank 3 upward.
_DIM_RANK_TABLE = {
    (3, 1): "A1",
    (8, 2): "A2",
    (10, 2): "B2",
    (14, 2): "G2",
    (15, 3): "A3",
    (21, 3): None,  # B3 and C3 share (21, 3); not decidable without splitting
    (24, 4): "A4",
    (28, 4): "D4",
    (36, 4): None,  # B4 / C4
    (52, 4): "F4",
    (35, 5): "A5",
    (45, 5): "D5",
    (55, 5): None,
    (78, 6): "E6",
    (133, 7): "E7",
    (248, 8): "E8",
}


def decompose_ideals(algebra: LieAlgebraPresentation) -> List[List[Vector]]:
    """Minimal ideals of a semisimple algebra.

    Seed closures split factor-pure bases cheaply; the commutant of the
    adjoint action handles bases whose elements straddle isomorphic factors.
    Pieces are returned as lists of coordinate vectors over the input basis.
    """
    if algebra.dim == 0:
        return []
    pending: List[LieAlgebraPresentation] = [algebra]
    lifts: List[Optional[List[Vector]]] = [None]  # piece basis in `algebra` coords
    result: List[List[Vector]] = []
    while pending:
        sub = pending.pop()
        lift = lifts.pop()
        split = _split_seed(sub) or _split_commutant(sub)
        if split is None:
            result.append(lift if lift is not None else [_unit(algebra.dim, i) for i in range(algebra.dim)])
            continue
        for piece in split:
            lifted = piece if lift is None else [_combine(lift, v) for v in piece]
            pending.append(subalgebra_presentation(algebra, lifted))
            lifts.append(lifted)
    result.sort(key=lambda s: (len(s), [tuple(v) for v in s]))
    return result


def _combine(basis_vectors: List[Vector], coeffs: Vector) -> Vector:
    out = [Fraction(0)] * len(basis_vectors[0])
    for c, v in zip(coeffs, basis_vectors):
        if c:
            for i, x in enumerate(v):
                out[i] += c * x
    return out


def _split_seed(algebra: LieAlgebraPresentation) -> Optional[List[List[Vector]]]:
    """Split off the ideal generated by a single basis element, when proper."""
    kappa = None
    for seed in range(algebra.dim):
        ideal = _ideal_closure(algebra, _unit(algebra.dim, seed))
        if len(ideal) < algebra.dim:
            if kappa is None:
                kappa = algebra.killing_matrix()
            rows = [linalg.mat_vec(kappa, v) for v in ideal]
            complement = linalg.nullspace(rows, algebra.dim)
            return [ideal, complement]
    return None


def _ideal_closure(algebra, seed_vec: Vector) -> List[Vector]:
    solver = SpanSolver(lambda k: -k)
    vecs: List[Vector] = []
    queue: List[Vector] = []
    if solver.add_row(_vec_to_dict(seed_vec)):
        vecs.append(list(seed_vec))
        queue.append(list(seed_vec))
    while queue:
        v = queue.pop()
        for i in range(algebra.dim):
            br = algebra.bracket_vectors(_unit(algebra.dim, i), v)
            if br and solver.add_row(dict(br)):
                w = inner_to_vec(br, algebra.dim)
                vecs.append(w)
                queue.append(w)
    return vecs


_COMMUTANT_DIM_CAP = 30


def _split_commutant(algebra: LieAlgebraPresentation) -> Optional[List[List[Vector]]]:
    """Split along eigenspaces of a generic ad-commuting operator.

    Operators commuting with the whole adjoint action preserve every ideal
    and act as scalars on absolutely simple factors, so the eigenspaces of a
    generic one are unions of minimal ideals.
    """
    d = algebra.dim
    if d > _COMMUTANT_DIM_CAP:
        return None
    ads = [algebra.ad_matrix(_unit(d, i)) for i in range(d)]
    # Two generic elements usually pin the commutant; verify at the end.
    for attempt in (2, d):
        picks = []
        for s in range(attempt if attempt < d else d):
            if attempt == d:
                picks.append(ads[s])
            else:
                combo = linalg.zeros(d, d)
                for i in range(d):
                    combo = linalg.mat_add(combo, linalg.mat_scale(ads[i], (s + 1) * (i + 2) % 7 + 1))
                picks.append(combo)
        basis = _matrix_commutant(picks, d)
        if len(basis) == 1:
            return None  # scalars only: simple
        split = _eigensplit_commutant(algebra, basis, ads)
        if split is not None:
            return split
    return None


def _matrix_commutant(mats: List[Matrix], d: int) -> List[Matrix]:
    rows = []
    for m in mats:
        for p in range(d):
            for q in range(d):
                row = [Fraction(0)] * (d * d)
                for r in range(d):
                    row[p * d + r] += m[r][q]
                    row[r * d + q] -= m[p][r]
                if any(row):
                    rows.append(row)
    kernel = linalg.nullspace(rows, d * d)
    return [[vec[p * d : (p + 1) * d] for p in range(d)] for vec in kernel]


def _eigensplit_commutant(algebra, commutant_basis, ads) -> Optional[List[List[Vector]]]:
    d = algebra.dim
    t = linalg.zeros(d, d)
    for k, m in enumerate(commutant_basis):
        t = linalg.mat_add(t, linalg.mat_scale(m, k + 1))
    eigenvalues = _rational_eigenvalues(t)
    if eigenvalues is None or len(eigenvalues) < 2:
        return None
    pieces = []
    total = 0
    for lam in eigenvalues:
        shifted = [[t[i][j] - (lam if i == j else 0) for j in range(d)] for i in range(d)]
        kernel = linalg.nullspace(shifted, d)
        if kernel:
            pieces.append(kernel)
            total += len(kernel)
    if total != d:
        return None
    # Each piece must be an ideal; otherwise the commutant was overestimated.
    for piece in pieces:
        span = SpanSolver(lambda k: -k)
        for v in piece:
            span.add_row(_vec_to_dict(v))
        for v in piece:
            for i in range(d):
                br = algebra.bracket_vectors(_unit(d, i), v)
                if br:
                    coeffs, residual = span.reduce(dict(br))
                    if coeffs is None:
                        return None
    return pieces


def _rational_eigenvalues(t: Matrix) -> Optional[List[Fraction]]:
    """Distinct rational eigenvalues of t via its Krylov minimal polynomial.

    Returns None when the minimal polynomial does not split over the
    rationals (all roots are searched by the rational root theorem).
    """
    d = len(t)
    v = [Fraction(i + 1) for i in range(d)]
    krylov = [v]
    for _ in range(d):
        krylov.append(linalg.mat_vec(t, krylov[-1]))
        coeffs = linalg.nullspace(linalg.transpose(krylov), len(krylov))
        if coeffs:
            poly = coeffs[0]
            break
    else:
        return None
    # poly: sum poly[k] * t^k v = 0; normalize to integer coefficients.
    lcm = 1
    for c in poly:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in poly]
    while ints and ints[-1] == 0:
        ints.pop()
    if len(ints) < 2:
        return None
    roots = _rational_roots(ints)
    # The minimal polynomial of a split semisimple operator is squarefree
    # with all roots rational; demand full splitting.
    residual = ints
    for r in roots:
        residual = _deflate(residual, r)
        if residual is None:
            return None
    if len(residual) != 1:
        return None
    return sorted(set(roots))


def _rational_roots(ints: List[int]) -> List[Fraction]:
    a0, ak = ints[0], ints[-1]
    if a0 == 0:
        reduced = list(ints)
        while reduced and reduced[0] == 0:
            reduced.pop(0)
        return sorted(set([Fraction(0)] + (_rational_roots(reduced) if len(reduced) > 1 else [])))
    roots = []
    for p in _divisors(abs(a0)):
        for q in _divisors(abs(ak)):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                value = Fraction(0)
                for c in reversed(ints):
                    value = value * cand + c
                if value == 0:
                    roots.append(cand)
    return sorted(set(roots))


def _divisors(n: int) -> List[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _deflate(ints: List[int], root: Fraction) -> Optional[List[int]]:
    """Divide the integer polynomial by (x - root); None when not a factor."""
    coeffs = [Fraction(c) for c in ints]
    out = []
    carry = Fraction(0)
    for c in reversed(coeffs):
        carry = c + carry * root
        out.append(carry)
    if out[-1] != 0:
        return None
    quotient = list(reversed(out[:-1]))
    lcm = 1
    for c in quotient:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return [int(c * lcm) for c in quotient]


def _generic_rank(algebra: LieAlgebraPresentation) -> int:
    """Rank of the complexification: minimal centralizer dimension over a few
    deterministic sample elements."""
    best = algebra.dim
    for seed in (1, 2, 5, 11):
        vec = [Fraction((seed * (3 * i + 1)) % 17 + 1) for i in range(algebra.dim)]
        central = _centralizer(algebra, [vec])
        best = min(best, len(central))
    return best


def subalgebra_presentation(algebra: LieAlgebraPresentation, vectors: List[Vector]) -> LieAlgebraPresentation:
    """Presentation of the subalgebra spanned by coordinate vectors."""
    polys = [algebra.element_polynomial(v) for v in vectors]
    return close_and_present(polys, algebra.form)


def identify_algebra(algebra: LieAlgebraPresentation) -> List[str]:
    """Simple-type labels of a semisimple quadric algebra.

    Runs the split root-space route when the basis admits a diagonal torus;
    otherwise splits into minimal ideals and identifies non-split factors by
    dimension and rank.
    """
    if algebra.dim == 0:
        return []
    if not algebra.is_semisimple():
        raise ValueError("algebra is not semisimple")
    try:
        cd = cartan_subalgebra(algebra)
        full = root_decomposition(algebra, cd)
        return identify_type(full)
    except NotAdaptedError:
        pass
    labels: List[str] = []
    for ideal in decompose_ideals(algebra):
        sub = subalgebra_presentation(algebra, ideal)
        try:
            cd = cartan_subalgebra(sub)
            full = root_decomposition(sub, cd)
            labels.extend(identify_type(full))
            continue
        except NotAdaptedError:
            pass
        key = (sub.dim, _generic_rank(sub))
        label = _DIM_RANK_TABLE.get(key)
        if label is None and key in _DIM_RANK_TABLE:
            raise NotAdaptedError(
                f"non-split factor of dimension {key[0]} and rank {key[1]} is "
                f"ambiguous between types B and C"
            )
        if label is None:
            raise NotAdaptedError(f"no simple type of dimension {key[0]} and rank {key[1]}")
        labels.append(label)
    return sorted(labels, key=lambda s: (s[0], int(s[1:])))


def _vec_to_dict(v: Sequence) -> Dict[int, Fraction]:
    return {i: Fraction(x) for i, x in enumerate(v) if x}


# ---------------------------------------------------------------------------
# Exponentials and the block form of sp elements.
# ---------------------------------------------------------------------------


def exp_nilpotent_action(matrix: Sequence[Sequence], vector: Sequence, budget: Optional[int] = None) -> Vector:
    """Exact exp(M) v for nilpotent M; rejects non-nilpotent input.

    The power series is summed up to the nilpotency index, so the result is
    an exact rational vector.
    """
    m = linalg.mat(matrix)
    dim = len(m)
    limit = budget if budget is not None else dim
    power = m
    index = None
    for k in range(1, limit + 1):
        if linalg.mat_eq_zero(power):
            index = k
            break
        power = linalg.mat_mul(power, m)
    if index is None:
        if not linalg.mat_eq_zero(power):
            raise ValueError("matrix is not nilpotent within the budget")
        index = limit + 1
    out = [Fraction(x) for x in vector]
    term = [Fraction(x) for x in vector]
    factorial = 1
    for k in range(1, index):
        term = linalg.mat_vec(m, term)
        factorial *= k
        out = [a + b / factorial for a, b in zip(out, term)]
    return out


def exp_orbit_points(
    algebra: LieAlgebraPresentation,
    cartan: CartanData,
    base_point: Sequence,
    count: int,
    seed: int,
) -> List[Vector]:
    """Deterministic sample of points in the orbit of the base point.

    Root vectors act nilpotently, so products of their exact exponentials
    map cone points to cone points.
    """
    import random

    rng = random.Random(seed)
    images = algebra.sp_images()
    roots = cartan.root_spaces
    if not roots:
        raise ValueError("no root vectors to exponentiate")
    points: List[Vector] = []
    for _ in range(count):
        vec = [Fraction(x) for x in base_point]
        for _ in range(rng.randint(1, 3)):
            _, eigvec = roots[rng.randrange(len(roots))]
            rho = linalg.zeros(algebra.form.dim, algebra.form.dim)
            for i, c in enumerate(eigvec):
                if c:
                    rho = linalg.mat_add(rho, linalg.mat_scale(images[i], c))
            t = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
            vec = exp_nilpotent_action(linalg.mat_scale(rho, t), vec)
        points.append(vec)
    return points


@dataclass
class BlockView:
    """Named blocks of an sp element written in the standard block basis."""

    lam0: Fraction
    a1: Vector
    a2: Vector
    b: Vector
    c: Vector
    mu: Fraction
    nu: Fraction
    A: Matrix
    B: Matrix
    C: Matrix

    def vanishes_at_base_point(self) -> bool:
        """Block constraints of algebras whose quadrics vanish at the first
        basis vector: mu = 0, b = 0 and nu = 0."""
        return self.mu == 0 and all(x == 0 for x in self.b) and self.nu == 0


def block_view(matrix: Sequence[Sequence], n: int) -> BlockView:
    """Decompose a 2n x 2n sp matrix into the named blocks.

    The splitting is (1, n-1 | 1, n-1) in both directions; membership in sp
    for the standard form is verified via the block relations.
    """
    m = linalg.mat(matrix)
    if len(m) != 2 * n:
        raise ValueError("matrix size does not match n")
    p_block = [row[:n] for row in m[:n]]
    q_block = [row[n:] for row in m[:n]]
    r_block = [row[:n] for row in m[n:]]
    s_block = [row[n:] for row in m[n:]]
    if not linalg.is_symmetric(q_block) or not linalg.is_symmetric(r_block):
        raise ValueError("matrix is not in sp for the standard form")
    if s_block != [[-p_block[j][i] for j in range(n)] for i in range(n)]:
        raise ValueError("matrix is not in sp for the standard form")
    return BlockView(
        lam0=p_block[0][0],
        a1=[p_block[i][0] for i in range(1, n)],
        a2=[p_block[0][j] for j in range(1, n)],
        b=[r_block[i][0] for i in range(1, n)],
        c=[q_block[i][0] for i in range(1, n)],
        mu=r_block[0][0],
        nu=q_block[0][0],
        A=[row[1:] for row in p_block[1:]],
        B=[row[1:] for row in r_block[1:]],
        C=[row[1:] for row in q_block[1:]],
    )
