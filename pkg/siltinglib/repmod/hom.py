from __future__ import annotations

from typing import List

from siltinglib.exactalg import Matrix, kernel_basis
from siltinglib.repmod.rep import Rep, RepMap


def _check_same_algebra(m: Rep, n: Rep):
    if m.algebra is not n.algebra:
        raise ValueError("modules live over different algebras")


def hom_basis(m: Rep, n: Rep) -> List[RepMap]:
    """
    A basis of ``Hom(m, n)``: the solutions ``f`` of ``N_a f_i = f_j M_a`` for every arrow ``a: i -> j``.
    """
    _check_same_algebra(m, n)
    field = m.field
    quiver = m.algebra.quiver
    offsets, count = [], 0
    for v in range(quiver.vertex_count):
        offsets.append(count)
        count += n.dims[v] * m.dims[v]

    def var(v: int, r: int, c: int) -> int:
        return offsets[v] + r * m.dims[v] + c

    equations = []
    for a, arrow in enumerate(quiver.arrows):
        i, j = arrow.source, arrow.target
        source_map, target_map = m.arrow_maps[a], n.arrow_maps[a]
        for r in range(n.dims[j]):
            for c in range(m.dims[i]):
                row = {}
                # (N_a f_i)[r][c]
                for k in range(n.dims[i]):
                    coefficient = target_map.rows[r][k]
                    if coefficient:
                        key = var(i, k, c)
                        row[key] = row.get(key, field.zero) + coefficient
                # (f_j M_a)[r][c]
                for k in range(m.dims[j]):
                    coefficient = source_map.rows[k][c]
                    if coefficient:
                        key = var(j, r, k)
                        row[key] = row.get(key, field.zero) - coefficient
                if any(row.values()):
                    dense = [field.zero] * count
                    for key, value in row.items():
                        dense[key] = value
                    equations.append(dense)

    system = Matrix.from_rows(field, equations, count) if equations else Matrix.zeros(field, 0, count)
    out = []
    for solution in kernel_basis(system):
        blocks = []
        for v in range(quiver.vertex_count):
            rows = tuple(
                tuple(solution[var(v, r, c)] for c in range(m.dims[v])) for r in range(n.dims[v])
            )
            blocks.append(Matrix(field, n.dims[v], m.dims[v], rows))
        out.append(RepMap(m, n, tuple(blocks)))
    return out


def hom_dim(m: Rep, n: Rep) -> int:
    return len(hom_basis(m, n))


def end_basis(m: Rep) -> List[RepMap]:
    return hom_basis(m, m)
