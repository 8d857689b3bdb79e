#include "qtoric/polytope.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace qtoric {

std::string indexSetStr(const IndexSet& s) {
    if (s.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

IndexSet parseIndexSet(const std::string& text) {
    IndexSet s;
    if (text == "-" || text.empty()) return s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size() || v < 1) throw std::invalid_argument(item);
            s.push_back(v);
        } catch (const std::exception&) {
            throw SpecParseError("bad index set \"" + text + "\"");
        }
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::string coordsStr(const VecS& coords) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += coords(i).str();
    }
    return out + ")";
}

namespace {

std::vector<std::string> splitWs(const std::string& line) {
    std::vector<std::string> tokens;
    std::stringstream ss(line);
    std::string t;
    while (ss >> t) tokens.push_back(t);
    return tokens;
}

[[noreturn]] void parseFail(int lineNo, const std::string& what) {
    throw SpecParseError("line " + std::to_string(lineNo) + ": " + what);
}

} // namespace

PolytopeSpec parseSpec(const std::string& text, const std::string& name) {
    PolytopeSpec spec;
    spec.name = name;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    bool haveDim = false, haveSqrt = false, haveFacet = false, haveQgen = false;
    auto scalarAt = [&](const std::string& tok, int ln) {
        try {
            return Scalar::parse(tok, spec.field);
        } catch (const SpecParseError& e) {
            parseFail(ln, e.what());
        }
    };
    while (std::getline(in, line)) {
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto tokens = splitWs(line);
        if (tokens.empty()) continue;
        const std::string& kw = tokens[0];
        if (kw == "dim") {
            if (haveDim) parseFail(lineNo, "duplicate dim line");
            if (tokens.size() != 2) parseFail(lineNo, "expected: dim <n>");
            try {
                spec.n = std::stoi(tokens[1]);
            } catch (const std::exception&) {
                parseFail(lineNo, "bad dimension \"" + tokens[1] + "\"");
            }
            if (spec.n < 1) parseFail(lineNo, "dimension must be >= 1");
            haveDim = true;
        } else if (kw == "sqrt") {
            if (!haveDim) parseFail(lineNo, "sqrt before dim");
            if (haveSqrt) parseFail(lineNo, "duplicate sqrt line");
            if (haveFacet || haveQgen) parseFail(lineNo, "sqrt must precede facets");
            if (tokens.size() != 2) parseFail(lineNo, "expected: sqrt <d>");
            try {
                spec.field.d = std::stoll(tokens[1]);
            } catch (const std::exception&) {
                parseFail(lineNo, "bad field \"" + tokens[1] + "\"");
            }
            try {
                spec.field.validate();
            } catch (const SpecParseError& e) {
                parseFail(lineNo, e.what());
            }
            haveSqrt = true;
        } else if (kw == "facet") {
            if (!haveDim) parseFail(lineNo, "facet before dim");
            if (haveQgen) parseFail(lineNo, "facet after qgen");
            const size_t n = static_cast<size_t>(spec.n);
            if (tokens.size() != n + 3 || tokens[n + 1] != "|")
                parseFail(lineNo, "expected: facet <" + std::to_string(spec.n) +
                                      " scalars> | <scalar>");
            Halfspace hs;
            hs.normal = VecS(spec.n);
            for (size_t i = 0; i < n; ++i)
                hs.normal(static_cast<Eigen::Index>(i)) = scalarAt(tokens[1 + i], lineNo);
            hs.offset = scalarAt(tokens[n + 2], lineNo);
            bool zero = true;
            for (Eigen::Index i = 0; i < hs.normal.size(); ++i)
                if (!hs.normal(i).isZero()) zero = false;
            if (zero) parseFail(lineNo, "facet normal is zero");
            spec.facets.push_back(std::move(hs));
            haveFacet = true;
        } else if (kw == "qgen") {
            if (!haveFacet) parseFail(lineNo, "qgen before facets");
            if (tokens.size() != static_cast<size_t>(spec.n) + 1)
                parseFail(lineNo, "expected: qgen <" + std::to_string(spec.n) + " scalars>");
            VecS g(spec.n);
            for (int i = 0; i < spec.n; ++i)
                g(i) = scalarAt(tokens[static_cast<size_t>(i) + 1], lineNo);
            spec.extraGenerators.push_back(std::move(g));
            haveQgen = true;
        } else {
            parseFail(lineNo, "unknown directive \"" + kw + "\"");
        }
    }
    if (!haveDim) throw SpecParseError("missing dim line");
    if (!haveFacet) throw SpecParseError("no facet lines");
    return spec;
}

PolytopeSpec parseSpecFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecParseError("cannot open spec file \"" + path + "\"");
    std::ostringstream content;
    content << in.rdbuf();
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
    if (auto dot = name.find_last_of('.'); dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    return parseSpec(content.str(), name);
}

std::string formatSpec(const PolytopeSpec& spec) {
    std::ostringstream out;
    out << "dim " << spec.n << "\n";
    if (!spec.field.isRational()) out << "sqrt " << spec.field.d << "\n";
    for (const Halfspace& hs : spec.facets) {
        out << "facet";
        for (Eigen::Index i = 0; i < hs.normal.size(); ++i) out << ' ' << hs.normal(i).str();
        out << " | " << hs.offset.str() << "\n";
    }
    for (const VecS& g : spec.extraGenerators) {
        out << "qgen";
        for (Eigen::Index i = 0; i < g.size(); ++i) out << ' ' << g(i).str();
        out << "\n";
    }
    return out.str();
}

namespace {

struct VecSLess {
    bool operator()(const VecS& a, const VecS& b) const {
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            if (a(i) < b(i)) return true;
            if (b(i) < a(i)) return false;
        }
        return false;
    }
};

MatS normalMatrix(const PolytopeSpec& spec) {
    MatS m(spec.facetCount(), spec.n);
    for (int j = 0; j < spec.facetCount(); ++j)
        m.row(j) = spec.facets[static_cast<size_t>(j)].normal.transpose();
    return m;
}

// Walk all size-k index subsets of {0,...,d-1}.
template <typename Fn>
void forEachSubset(int d, int k, Fn&& fn) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    if (k > d) return;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == d - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

// A nonzero direction u with <u, X_j> >= 0 for all j, if one exists.  Any
// such ray lies in the recession cone; for spanning normals the cone is
// pointed, so searching the (n-1)-subset nullspace directions is complete.
std::optional<VecS> recessionRay(const PolytopeSpec& spec) {
    const int d = spec.facetCount();
    const int n = spec.n;
    std::optional<VecS> found;
    forEachSubset(d, n - 1, [&](const std::vector<int>& idx) {
        if (found) return;
        MatS m(n - 1, n);
        for (int i = 0; i < n - 1; ++i)
            m.row(i) = spec.facets[static_cast<size_t>(idx[static_cast<size_t>(i)])].normal.transpose();
        MatS null = nullspaceBasis(m);
        if (null.cols() != 1) return;
        for (int s = 0; s < 2; ++s) {
            VecS u = s == 0 ? VecS(null.col(0)) : VecS(-null.col(0));
            bool ray = true;
            for (int j = 0; j < d && ray; ++j)
                if (pairing(u, spec.facets[static_cast<size_t>(j)].normal).sign() < 0) ray = false;
            if (ray) {
                found = u;
                return;
            }
        }
    });
    return found;
}

} // namespace

std::vector<Vertex> enumerateVertices(const PolytopeSpec& spec) {
    const int d = spec.facetCount();
    const int n = spec.n;
    if (d < n + 1)
        throw GeometryError("spec has " + std::to_string(d) + " facets; a bounded " +
                            std::to_string(n) + "-polytope needs at least " + std::to_string(n + 1));
    if (rank(normalMatrix(spec)) < n)
        throw GeometryError("facet normals do not span R^n; degenerate spec");

    std::map<VecS, IndexSet, VecSLess> seen;
    forEachSubset(d, n, [&](const std::vector<int>& idx) {
        MatS a(n, n);
        VecS rhs(n);
        for (int i = 0; i < n; ++i) {
            const Halfspace& hs = spec.facets[static_cast<size_t>(idx[static_cast<size_t>(i)])];
            a.row(i) = hs.normal.transpose();
            rhs(i) = hs.offset;
        }
        auto mu = solveSquare(a, rhs);
        if (!mu) return;
        IndexSet active;
        for (int j = 0; j < d; ++j) {
            const Halfspace& hs = spec.facets[static_cast<size_t>(j)];
            const int s = (pairing(*mu, hs.normal) - hs.offset).sign();
            if (s < 0) return; // infeasible
            if (s == 0) active.push_back(j + 1);
        }
        auto [it, inserted] = seen.emplace(*mu, active);
        if (!inserted && it->second != active)
            throw InternalError("vertex enumeration: coincident points with differing active sets");
    });
    if (seen.empty()) throw GeometryError("polytope is empty");

    std::vector<Vertex> vertices;
    vertices.reserve(seen.size());
    for (auto& [coords, active] : seen) vertices.push_back({coords, active});
    std::sort(vertices.begin(), vertices.end(),
              [](const Vertex& a, const Vertex& b) { return a.active < b.active; });
    return vertices;
}

std::string SimplicityReport::describe(const std::vector<Vertex>& vertices) const {
    std::ostringstream out;
    for (int id : nonsimpleVertices) {
        const Vertex& v = vertices[static_cast<size_t>(id)];
        out << "vertex " << coordsStr(v.coords) << " lies on " << v.active.size()
            << " facets; polytope not simple\n";
    }
    for (int j : redundantFacets) out << "facet " << j << " is tight at no vertex; redundant\n";
    if (!bounded) {
        out << "polytope is unbounded";
        if (recessionRay) out << " (recession direction " << coordsStr(*recessionRay) << ")";
        out << "\n";
    }
    if (!fullDimensional) out << "vertex set does not affinely span R^n; not full-dimensional\n";
    std::string s = out.str();
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

SimplicityReport checkSimple(const PolytopeSpec& spec, const std::vector<Vertex>& vertices) {
    SimplicityReport report;
    report.recessionRay = recessionRay(spec);
    report.bounded = !report.recessionRay.has_value();

    std::vector<VecS> points;
    points.reserve(vertices.size());
    for (const Vertex& v : vertices) points.push_back(v.coords);
    report.fullDimensional = affineRank(points) == spec.n;

    for (size_t id = 0; id < vertices.size(); ++id)
        if (static_cast<int>(vertices[id].active.size()) != spec.n)
            report.nonsimpleVertices.push_back(static_cast<int>(id));

    std::vector<char> tight(static_cast<size_t>(spec.facetCount()) + 1, 0);
    for (const Vertex& v : vertices)
        for (int j : v.active) tight[static_cast<size_t>(j)] = 1;
    for (int j = 1; j <= spec.facetCount(); ++j)
        if (!tight[static_cast<size_t>(j)]) report.redundantFacets.push_back(j);
    return report;
}

void requireSimple(const PolytopeSpec& spec, const std::vector<Vertex>& vertices) {
    SimplicityReport report = checkSimple(spec, vertices);
    if (!report.simple()) throw GeometryError(report.describe(vertices));
}

const Face& FaceLattice::faceBySet(const IndexSet& s) const {
    auto it = faceIndex.find(s);
    if (it == faceIndex.end())
        throw InternalError("face lattice: no face with index set {" + indexSetStr(s) + "}");
    return faces[static_cast<size_t>(it->second)];
}

FaceLattice buildFaceLattice(const PolytopeSpec& spec, const std::vector<Vertex>& vertices) {
    const int n = spec.n;
    for (const Vertex& v : vertices)
        if (static_cast<int>(v.active.size()) != n)
            throw InternalError("face lattice: nonsimple vertex " + coordsStr(v.coords));

    // In a simple polytope the faces through a vertex are exactly the
    // subsets of its active set.
    std::set<IndexSet> sets;
    for (const Vertex& v : vertices) {
        const unsigned full = 1u << n;
        for (unsigned mask = 0; mask < full; ++mask) {
            IndexSet s;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) s.push_back(v.active[static_cast<size_t>(i)]);
            sets.insert(std::move(s));
        }
    }

    FaceLattice lattice;
    lattice.n = n;
    for (const IndexSet& s : sets) {
        Face face;
        face.active = s;
        face.dim = n - static_cast<int>(s.size());
        for (size_t id = 0; id < vertices.size(); ++id) {
            const IndexSet& a = vertices[id].active;
            if (std::includes(a.begin(), a.end(), s.begin(), s.end()))
                face.vertices.push_back(static_cast<int>(id));
        }
        lattice.faces.push_back(std::move(face));
    }
    std::sort(lattice.faces.begin(), lattice.faces.end(), [](const Face& a, const Face& b) {
        if (a.active.size() != b.active.size()) return a.active.size() < b.active.size();
        return a.active < b.active;
    });
    for (size_t i = 0; i < lattice.faces.size(); ++i)
        lattice.faceIndex[lattice.faces[i].active] = static_cast<int>(i);

    // Consistency: the common active set of a face's vertices is the face.
    for (const Face& face : lattice.faces) {
        if (face.vertices.empty()) throw InternalError("face lattice: face without vertices");
        IndexSet common = vertices[static_cast<size_t>(face.vertices[0])].active;
        for (int id : face.vertices) {
            const IndexSet& a = vertices[static_cast<size_t>(id)].active;
            IndexSet next;
            std::set_intersection(common.begin(), common.end(), a.begin(), a.end(),
                                  std::back_inserter(next));
            common = std::move(next);
        }
        if (common != face.active)
            throw InternalError("face lattice: inconsistent index set {" +
                                indexSetStr(face.active) + "}");
        if (face.dim == 1 && face.vertices.size() != 2)
            throw InternalError("face lattice: edge {" + indexSetStr(face.active) + "} has " +
                                std::to_string(face.vertices.size()) + " vertices");
        if (face.dim == 0 && face.vertices.size() != 1)
            throw InternalError("face lattice: vertex face with multiple vertices");
    }

    lattice.covers.resize(lattice.faces.size());
    for (size_t i = 0; i < lattice.faces.size(); ++i) {
        const IndexSet& s = lattice.faces[i].active;
        for (size_t drop = 0; drop < s.size(); ++drop) {
            IndexSet parent;
            for (size_t t = 0; t < s.size(); ++t)
                if (t != drop) parent.push_back(s[t]);
            auto it = lattice.faceIndex.find(parent);
            if (it == lattice.faceIndex.end())
                throw InternalError("face lattice: missing parent of {" + indexSetStr(s) + "}");
            lattice.covers[static_cast<size_t>(it->second)].push_back(static_cast<int>(i));
        }
    }
    return lattice;
}

std::string FVector::str() const {
    std::string out;
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(f[i]);
    }
    return out;
}

FVector fVector(const FaceLattice& lattice) {
    FVector fv;
    fv.f.assign(static_cast<size_t>(lattice.n) + 1, 0);
    for (const Face& face : lattice.faces) ++fv.f[static_cast<size_t>(face.dim)];
    if (fv.f.back() != 1) throw InternalError("f-vector: f_n != 1");
    return fv;
}

} // namespace qtoric
