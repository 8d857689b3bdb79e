#include "qtoric/quasilattice.hpp"

#include <sstream>

namespace qtoric {

Quasilattice quasilatticeOf(const PolytopeSpec& spec) {
    Quasilattice q;
    q.field = spec.field;
    q.n = spec.n;
    for (const Halfspace& hs : spec.facets) q.generators.push_back(hs.normal);
    for (const VecS& g : spec.extraGenerators) q.generators.push_back(g);
    return q;
}

namespace {

// Rows are the vectors embedded into Q^n (rational field) or Q^{2n}
// (interleaved {1, sqrt d} coordinates).
MatS embeddedRows(const std::vector<VecS>& vectors, int n, bool quadratic) {
    const int m = quadratic ? 2 * n : n;
    MatS rows(static_cast<Eigen::Index>(vectors.size()), m);
    rows.setZero();
    for (size_t i = 0; i < vectors.size(); ++i) {
        for (int c = 0; c < n; ++c) {
            auto [a, b] = rationalEmbedding(vectors[i](c));
            if (quadratic) {
                rows(static_cast<Eigen::Index>(i), 2 * c) = Scalar(a);
                rows(static_cast<Eigen::Index>(i), 2 * c + 1) = Scalar(b);
            } else {
                if (b != 0)
                    throw InternalError("embedding: sqrt part present in rational embedding");
                rows(static_cast<Eigen::Index>(i), c) = Scalar(a);
            }
        }
    }
    return rows;
}

} // namespace

int quasilatticeZRank(const Quasilattice& q) {
    if (q.generators.empty()) return 0;
    return rank(embeddedRows(q.generators, q.n, !q.field.isRational()));
}

bool isRational(const Quasilattice& q) { return quasilatticeZRank(q) == q.n; }

KernelBasis kernelBasis(const PolytopeSpec& spec) {
    const int d = spec.facetCount();
    MatS proj(spec.n, d);
    for (int j = 0; j < d; ++j) proj.col(j) = spec.facets[static_cast<size_t>(j)].normal;
    if (rank(proj) < spec.n)
        throw GeometryError("facet normals do not span R^n; degenerate spec");
    KernelBasis basis{nullspaceBasis(proj)};
    if (basis.vectors.cols() != d - spec.n)
        throw InternalError("kernel basis: unexpected dimension");
    return basis;
}

TorusElement::TorusElement(const VecS& raw) : coords(raw.size()) {
    for (Eigen::Index i = 0; i < raw.size(); ++i) coords(i) = raw(i).mod1();
}

bool TorusElement::isZero() const {
    for (Eigen::Index i = 0; i < coords.size(); ++i)
        if (!coords(i).isZero()) return false;
    return true;
}

std::string TorusElement::str() const {
    std::string out;
    for (Eigen::Index i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += coords(i).str();
    }
    return out;
}

std::vector<TorusElement> gammaGenerators(const PolytopeSpec& spec, const Vertex& vertex) {
    const int n = spec.n;
    if (static_cast<int>(vertex.active.size()) != n)
        throw GeometryError("vertex " + coordsStr(vertex.coords) + " lies on " +
                            std::to_string(vertex.active.size()) + " facets; not simple");
    MatS aNu(n, n);
    for (int i = 0; i < n; ++i)
        aNu.col(i) = spec.facets[static_cast<size_t>(vertex.active[static_cast<size_t>(i)] - 1)].normal;
    auto inv = inverse(aNu);
    if (!inv)
        throw GeometryError("active facet normals at " + coordsStr(vertex.coords) +
                            " are linearly dependent");
    std::vector<TorusElement> gens;
    for (int j = 1; j <= spec.facetCount(); ++j) {
        if (std::binary_search(vertex.active.begin(), vertex.active.end(), j)) continue;
        gens.emplace_back(VecS(*inv * spec.facets[static_cast<size_t>(j - 1)].normal));
    }
    for (const VecS& g : spec.extraGenerators) gens.emplace_back(VecS(*inv * g));
    return gens;
}

GroupStructure gammaStructure(const std::vector<TorusElement>& gens, int n,
                              const FieldSpec& field) {
    GroupStructure gs;
    gs.generators = gens;

    bool quadratic = false;
    if (!field.isRational()) {
        for (const TorusElement& g : gens)
            for (Eigen::Index i = 0; i < g.coords.size(); ++i)
                if (!g.coords(i).isRationalValue()) quadratic = true;
    }

    // Rows generating L = Z-span(Z^n, lifts of gens) in the embedding.
    std::vector<VecS> vectors;
    for (const TorusElement& g : gens) {
        if (static_cast<int>(g.coords.size()) != n)
            throw InternalError("gammaStructure: generator dimension mismatch");
        vectors.push_back(g.coords);
    }
    for (int i = 0; i < n; ++i) {
        VecS e = VecS::Zero(n);
        e(i) = Scalar(1);
        vectors.push_back(e);
    }
    MatS rows = embeddedRows(vectors, n, quadratic);

    Int denom = 1;
    for (Eigen::Index i = 0; i < rows.rows(); ++i)
        for (Eigen::Index j = 0; j < rows.cols(); ++j)
            denom = lcm(denom, Int(denominator(rows(i, j).rationalPart())));
    MatZ cleared(rows.rows(), rows.cols());
    for (Eigen::Index i = 0; i < rows.rows(); ++i)
        for (Eigen::Index j = 0; j < rows.cols(); ++j) {
            const Rat scaled = rows(i, j).rationalPart() * denom;
            if (denominator(scaled) != 1) throw InternalError("gammaStructure: clearing failed");
            cleared(i, j) = numerator(scaled);
        }

    const MatZ basis = hermiteRowBasis(cleared); // basis of D*L
    const int ell = static_cast<int>(basis.rows());
    if (ell < n) throw InternalError("gammaStructure: lattice rank below n");

    // Z^n (scaled by D) expressed in that basis: C with C * basis = D * emb(I).
    MatZ zRows = MatZ::Zero(n, basis.cols());
    for (int i = 0; i < n; ++i) zRows(i, quadratic ? 2 * i : i) = denom;
    auto coeff = solveExact(toScalarMatrix(basis).transpose(), toScalarMatrix(zRows).transpose());
    if (!coeff) throw InternalError("gammaStructure: Z^n not inside the generated module");
    MatZ relation(n, ell);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < ell; ++j) {
            const Scalar& c = (*coeff)(j, i);
            if (!c.isRationalValue() || denominator(c.rationalPart()) != 1)
                throw InternalError("gammaStructure: non-integer change of basis");
            relation(i, j) = numerator(c.rationalPart());
        }

    // Gamma = L / Z^n = Z^ell / rowspan(relation)
    SmithResult snf = smithNormalForm(relation);
    if (snf.rank != n) throw InternalError("gammaStructure: relation lattice rank != n");
    gs.freeRank = ell - n;
    gs.order = 1;
    for (const Int& s : snf.invariants) {
        if (s > 1) gs.invariantFactors.push_back(s);
        if (s != 0) gs.order *= s;
    }
    if (gs.freeRank > 0)
        gs.kind = GroupStructure::Kind::Infinite;
    else
        gs.kind = gs.order == 1 ? GroupStructure::Kind::Trivial : GroupStructure::Kind::Finite;
    return gs;
}

std::string GroupStructure::isoStr() const {
    if (kind == Kind::Trivial) return "trivial";
    std::ostringstream out;
    bool first = true;
    if (kind == Kind::Infinite) {
        out << "Z^" << freeRank;
        first = false;
    }
    for (const Int& s : invariantFactors) {
        if (!first) out << " x ";
        out << "Z/" << s;
        first = false;
    }
    return out.str();
}

} // namespace qtoric
