"""q-spinor representations: the relation AB = qBA and its solution spaces.

For a fixed 4x4 matrix A the set B(A) of all B with AB = qBA is a linear
subspace, computed exactly as the kernel of the flattened operator
X -> AX - qXA.  Seven canonical pairs (A, basis of B(A)) classify the
invertible-A, B(A)^2 != 0 situation; verify_canonical_form recomputes each
space and checks it against the stored basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Mat, Subspace, kernel, left_mul_operator, right_mul_operator
from .report import Report
from .scalars import ONE, DeformationParameter, Scalar, as_scalar, format_scalar

FORM_IDS = (1, 2, 3, 4, 5, 6, 7)


class InvalidFormParameter(ValueError):
    """The free diagonal entry of form 5 hits an excluded value."""


class VerificationFailure(AssertionError):
    """A canonical-form assertion failed."""


@dataclass(frozen=True)
class SpinorPair:
    """A candidate representation x -> a, y -> b of the relation xy = qyx."""

    a: Mat
    b: Mat
    q: DeformationParameter


def is_q_spinor(pair: SpinorPair) -> bool:
    return (pair.a * pair.b - (pair.b * pair.a).scale(pair.q.q)).is_zero


def spinor_space(a: Mat, q: DeformationParameter) -> Subspace:
    """B(A): all B with AB = qBA, as an RREF subspace of flattened matrices."""
    operator = left_mul_operator(a) - right_mul_operator(a).scale(q.q)
    return kernel(operator)


def space_square_nonzero(s: Subspace) -> bool:
    """Whether B(A)^2 != 0; checked on basis products, complete by bilinearity."""
    mats = s.matrices()
    return any(not (x * y).is_zero for x in mats for y in mats)


@dataclass(frozen=True)
class CanonicalForm:
    form_id: int
    a: Mat
    expected_basis: tuple[Mat, ...]
    alpha: Scalar | None = None

    @property
    def expected_dim(self) -> int:
        return len(self.expected_basis)


def form5_excluded(q: DeformationParameter) -> tuple[Scalar, ...]:
    qq = q.q
    return (Scalar(), q.inv, ONE, qq, qq * qq, qq ** 3)


def _default_form5_alpha(q: DeformationParameter) -> Scalar:
    excluded = set(form5_excluded(q))
    n = 2
    while as_scalar(n) in excluded:
        n += 1
    return as_scalar(n)


def canonical_forms(q: DeformationParameter, alpha: Scalar | None = None) -> list[CanonicalForm]:
    """The seven canonical (A, basis of B(A)) pairs at the given q.

    Form 5 carries a free diagonal entry; when alpha is omitted the smallest
    admissible integer >= 2 is chosen, deterministically in q.
    """
    qq = q.q
    u = lambda i, j: Mat.unit(4, i, j)
    if alpha is None:
        alpha = _default_form5_alpha(q)
    else:
        alpha = as_scalar(alpha)
        if alpha in set(form5_excluded(q)):
            raise InvalidFormParameter(f"alpha = {format_scalar(alpha)} is excluded for form 5")
    forms = [
        CanonicalForm(1, Mat.diag(qq * qq, qq, 1, 1), (u(1, 2), u(2, 3), u(2, 4))),
        CanonicalForm(2, Mat.diag(qq * qq, qq, qq, 1), (u(1, 2), u(1, 3), u(2, 4), u(3, 4))),
        CanonicalForm(3, Mat.diag(qq * qq, qq * qq, qq, 1), (u(1, 3), u(2, 3), u(3, 4))),
        CanonicalForm(4, Mat.diag(qq ** 3, qq * qq, qq, 1), (u(1, 2), u(2, 3), u(3, 4))),
        CanonicalForm(5, Mat.diag(alpha, qq * qq, qq, 1), (u(2, 3), u(3, 4)), alpha=alpha),
        CanonicalForm(6, Mat.diag(qq * qq, qq * qq, qq, 1) + u(1, 2), (u(1, 3), u(3, 4))),
        CanonicalForm(7, Mat.diag(qq * qq, qq, 1, 1) + u(3, 4), (u(2, 4), u(1, 2))),
    ]
    return forms


def verify_canonical_form(form: CanonicalForm, q: DeformationParameter) -> Report:
    """Recompute B(A) for one canonical form and compare with the stored basis.

    Raises VerificationFailure on the first failed assertion; on success the
    returned report itemizes the checks.
    """
    report = Report(f"canonical-form-{form.form_id}")
    space = spinor_space(form.a, q)
    expected = Subspace.span_of(form.expected_basis)
    report.add(
        "b_space_matches",
        space == expected,
        f"dim {space.dim}, expected {form.expected_dim}",
    )
    report.add("square_nonzero", space_square_nonzero(space))
    report.require(VerificationFailure)
    return report
