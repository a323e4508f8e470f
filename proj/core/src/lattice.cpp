#include "arimat/lattice.hpp"

#include <sstream>

#include "arimat/error.hpp"

namespace arimat {

namespace {

IntMatrix strip_zero_rows(const IntMatrix& h) {
    std::size_t nz = h.rows();
    while (nz > 0) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h.at(nz - 1, j) != 0) {
                zero = false;
                break;
            }
        if (!zero) break;
        --nz;
    }
    IntMatrix b(nz, h.cols());
    for (std::size_t i = 0; i < nz; ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) b.at(i, j) = h.at(i, j);
    return b;
}

} // namespace

Lattice::Lattice(std::size_t ambient_dim, const std::vector<std::vector<Int>>& generators)
    : ambient_(ambient_dim), basis_(0, ambient_dim) {
    for (const auto& g : generators)
        if (g.size() != ambient_dim) throw input_error("lattice generator has wrong length");
    basis_ = strip_zero_rows(hermite_normal_form(IntMatrix::from_rows(generators, ambient_dim)));
}

Lattice Lattice::from_matrix_rows(const IntMatrix& rows) {
    Lattice l(rows.cols());
    l.basis_ = strip_zero_rows(hermite_normal_form(rows));
    return l;
}

std::string Lattice::to_string() const {
    std::ostringstream os;
    os << "lattice rank " << rank() << " in Z^" << ambient_ << " " << basis_.to_string();
    return os.str();
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw input_error("lattice_sum: ambient mismatch");
    IntMatrix stack(a.rank() + b.rank(), a.ambient_dim());
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.ambient_dim(); ++j) stack.at(i, j) = a.basis().at(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.ambient_dim(); ++j)
            stack.at(a.rank() + i, j) = b.basis().at(i, j);
    return Lattice::from_matrix_rows(stack);
}

Int QuotientStructure::multiplicity() const {
    Int m = 1;
    for (const Int& t : torsion) m *= t;
    return m;
}

std::string QuotientStructure::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const Int& t : torsion) {
        if (!first) os << " x ";
        os << "Z/" << t;
        first = false;
    }
    return os.str();
}

QuotientStructure cokernel_structure(const IntMatrix& columns, const Lattice& relations) {
    if (columns.rows() != relations.ambient_dim())
        throw input_error("cokernel_structure: ambient dimension mismatch");
    const std::size_t d = columns.rows();
    IntMatrix m(d, columns.cols() + relations.rank());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < columns.cols(); ++j) m.at(i, j) = columns.at(i, j);
    for (std::size_t k = 0; k < relations.rank(); ++k)
        for (std::size_t i = 0; i < d; ++i)
            m.at(i, columns.cols() + k) = relations.basis().at(k, i);
    SmithDecomposition s = smith_normal_form(m);
    QuotientStructure q;
    q.free_rank = static_cast<int>(d - s.invariants.size());
    for (const Int& x : s.invariants)
        if (x > 1) q.torsion.push_back(x);
    return q;
}

Lattice saturate(const Lattice& l) {
    if (l.rank() == 0) return l;
    // basis = u_inv * diag * v_inv, so the first rank(l) rows of v_inv span
    // the saturation (the invariant factors are exactly what gets divided out)
    SmithDecomposition s = smith_normal_form(l.basis());
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < l.rank(); ++i) rows.push_back(s.v_inv.row(i));
    return Lattice(l.ambient_dim(), rows);
}

std::optional<ExpressResult> express_in_basis(const std::vector<Int>& v, const Lattice& l) {
    if (v.size() != l.ambient_dim()) throw input_error("express_in_basis: length mismatch");
    std::vector<Rat> residual(v.begin(), v.end());
    ExpressResult out;
    out.integral = true;
    const IntMatrix& b = l.basis();
    for (std::size_t i = 0; i < b.rows(); ++i) {
        std::size_t p = 0;
        while (p < b.cols() && b.at(i, p) == 0) ++p;
        // canonical basis rows are echelon, so p indexes this row's pivot
        Rat c = residual[p] / Rat(b.at(i, p));
        out.coords.push_back(c);
        if (!is_integer(c)) out.integral = false;
        if (c != 0)
            for (std::size_t j = p; j < b.cols(); ++j) residual[j] -= c * Rat(b.at(i, j));
    }
    for (const Rat& x : residual)
        if (x != 0) return std::nullopt;
    return out;
}

LatticeIndex lattice_index(const Lattice& sub, const Lattice& super) {
    if (sub.ambient_dim() != super.ambient_dim())
        throw input_error("lattice_index: ambient mismatch");
    IntMatrix coords(sub.rank(), super.rank());
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        auto e = express_in_basis(sub.basis().row(i), super);
        if (!e || !e->integral) throw input_error("lattice_index: sub is not contained in super");
        for (std::size_t j = 0; j < super.rank(); ++j) coords.at(i, j) = numerator(e->coords[j]);
    }
    LatticeIndex out;
    if (sub.rank() < super.rank()) {
        out.finite = false;
        return out;
    }
    SmithDecomposition s = smith_normal_form(coords);
    out.finite = true;
    out.index = 1;
    for (const Int& x : s.invariants) out.index *= x;
    return out;
}

} // namespace arimat
