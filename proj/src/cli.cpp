#include "qtoric/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qtoric/fixtures.hpp"
#include "qtoric/pipeline.hpp"

namespace qtoric::cli {

namespace {

struct UsageError : Error {
    using Error::Error;
};

constexpr unsigned long long kDefaultSeed = 1;

unsigned long long resolveSeed(const std::optional<unsigned long long>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("QTORIC_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw UsageError("QTORIC_SEED is not an integer: \"" + std::string(env) + "\"");
        return v;
    }
    return kDefaultSeed;
}

// exact value, with a clearly marked decimal approximation for non-integers
std::string scalarDisplay(const Scalar& s) {
    if (s.isIntegerValue()) return s.str();
    std::ostringstream os;
    os << s.str() << "(~" << s.approx() << ")";
    return os.str();
}

std::string coordsDisplay(const VecS& v) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += scalarDisplay(v(i));
    }
    return out + ")";
}

PolytopeSpec loadSpec(const std::string& path) { return parseSpecFile(path); }

// Everything `check` verifies beyond what runAnalysis already throws on.
std::vector<std::string> verifyInvariants(const Analysis& a,
                                          const std::vector<HVector>& extraHistograms) {
    std::vector<std::string> failures;
    const int n = a.spec.n;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    };

    expect(a.hF == a.hMorse, "h-vector methods disagree: from f " + a.hF.str() + " vs morse " +
                                 a.hMorse.str());
    expect(dehnSommerville(a.hF), "Dehn-Sommerville fails: " + a.hF.str());
    expect(a.hF.h.front() == 1, "h_0 != 1");
    expect(a.hF.h.back() == 1, "h_n != 1");
    expect(a.hF.h[1] == a.fvec.f[static_cast<size_t>(n) - 1] - n,
           "h_1 != f_{n-1} - n f_n");
    long long hsum = 0;
    for (long long v : a.hF.h) hsum += v;
    expect(hsum == a.fvec.f[0], "sum h_k != f_0");

    expect(a.bettiH == a.mv.betti, "Betti methods disagree: from h " + a.bettiH.str() +
                                       " vs Mayer-Vietoris " + a.mv.betti.str());
    const auto& b = a.mv.betti.b;
    for (size_t i = 0; i < b.size(); ++i) {
        expect(i % 2 == 0 || b[i] == 0, "odd Betti number nonzero");
        expect(b[i] == b[b.size() - 1 - i], "Betti palindrome fails");
    }
    expect(a.euler == a.fvec.f[0], "Euler characteristic != f_0");

    expect(static_cast<long long>(a.chartList.size()) == a.fvec.f[0], "chart count != f_0");
    long long faceCount = 0;
    for (long long v : a.fvec.f) faceCount += v;
    expect(static_cast<long long>(a.strataList.size()) == faceCount,
           "stratum count != number of faces");
    bool denseListed = false;
    for (const Stratum& s : a.strataList)
        if (s.face.empty()) denseListed = true;
    expect(denseListed, "dense stratum missing");
    for (const Chart& c : a.chartList) {
        // dense stratum lies in every chart: I_F = {} is a subset of I_nu
        bool found = false;
        for (const Stratum& s : a.strataList)
            if (s.face.empty() &&
                std::includes(c.vertexSet.begin(), c.vertexSet.end(), s.face.begin(),
                              s.face.end()))
                found = true;
        expect(found, "chart {" + indexSetStr(c.vertexSet) + "} misses the dense stratum");
    }

    int zeros = 0, tops = 0;
    for (const MorseEntry& e : a.morse.entries) {
        if (e.index == 0) ++zeros;
        if (e.index == n) ++tops;
    }
    expect(zeros == 1, "more than one vertex of index 0");
    expect(tops == 1, "more than one vertex of index n");

    for (const OverlapRecord& r : a.overlaps) {
        expect(r.sphereDim % 2 == 1, "overlap sphere dimension even");
        expect(r.sphereDim <= 2 * n - 1, "overlap sphere dimension too large");
    }

    // kernel basis columns annihilate the normals
    for (Eigen::Index c = 0; c < a.kernel.vectors.cols(); ++c) {
        VecS combo = VecS::Zero(n);
        for (int j = 0; j < a.spec.facetCount(); ++j)
            combo += a.kernel.vectors(j, c) * a.spec.facets[static_cast<size_t>(j)].normal;
        for (Eigen::Index i = 0; i < combo.size(); ++i)
            expect(combo(i).isZero(), "kernel basis vector does not annihilate the normals");
    }

    for (size_t i = 0; i < extraHistograms.size(); ++i)
        expect(extraHistograms[i] == a.hF,
               "direction " + std::to_string(i) + " yields a different index histogram");
    return failures;
}

// RunReport: the human-readable `check` output.
struct RunReport {
    const Analysis& a;
    int directionsChecked;
    const std::vector<std::string>& failures;

    void render(std::ostream& out) const {
        const PolytopeSpec& spec = a.spec;
        out << "spec: " << (spec.name.empty() ? "(unnamed)" : spec.name) << "\n";
        out << "field: " << spec.field.str() << "\n";
        out << "dimension: n = " << spec.n << ", facets: d = " << spec.facetCount() << "\n";
        out << "simple: yes\n";
        out << "f-vector: " << a.fvec.str() << "\n";
        out << "h-vector (from f): " << a.hF.str() << "\n";
        out << "h-vector (morse, seed " << a.seed << "): " << a.hMorse.str() << "\n";
        out << "rational: "
            << (a.rational ? "yes (zrank " + std::to_string(a.zrank) + " = n)"
                           : "no (zrank " + std::to_string(a.zrank) + " > n = " +
                                 std::to_string(spec.n) + ")")
            << "\n";
        out << "kernel dimension: " << a.kernel.vectors.cols() << "\n";
        out << "vertices by height:\n";
        for (size_t k = 0; k < a.morse.entries.size(); ++k) {
            const MorseEntry& e = a.morse.entries[k];
            const Vertex& v = a.vertices[static_cast<size_t>(e.vertexId)];
            out << "  k=" << (k + 1) << " {" << indexSetStr(v.active) << "} coords "
                << coordsDisplay(v.coords) << " height " << scalarDisplay(e.height) << " index "
                << e.index << " face " << indexSetStr(e.face) << "\n";
        }
        out << "charts:\n";
        for (const Chart& c : a.chartList) {
            out << "  {" << indexSetStr(c.vertexSet) << "} group " << c.group.isoStr();
            std::string gens;
            for (const TorusElement& g : c.group.generators) {
                if (g.isZero()) continue;
                gens += gens.empty() ? " gens " : " ";
                gens += g.str();
            }
            out << gens << "\n";
        }
        out << "betti (from h): " << a.bettiH.str() << "\n";
        out << "betti (mayer-vietoris): " << a.mv.betti.str() << "\n";
        out << "euler characteristic: " << a.euler << " (= f_0)\n";
        out << "poincare polynomial: " << poincareString(a.mv.betti) << "\n";
        if (directionsChecked > 1)
            out << "directions checked: " << directionsChecked << "\n";
        for (const std::string& f : failures) out << "FAIL: " << f << "\n";
        out << "check: " << (failures.empty() ? "PASS" : "FAILED") << "\n";
    }
};

int doCheck(const std::string& file, const std::optional<unsigned long long>& seedFlag,
            int directions, std::ostream& out) {
    const PolytopeSpec spec = loadSpec(file);
    const unsigned long long seed = resolveSeed(seedFlag);
    const Analysis a = runAnalysis(spec, seed);
    std::vector<HVector> histograms;
    for (int i = 1; i < directions; ++i) {
        const VecS dir = genericDirection(spec, a.vertices, seed + static_cast<unsigned>(i));
        histograms.push_back(hFromMorse(morseData(spec, a.vertices, a.lattice, dir), spec.n));
    }
    const std::vector<std::string> failures = verifyInvariants(a, histograms);
    RunReport{a, directions, failures}.render(out);
    return failures.empty() ? 0 : 5;
}

int doHVector(const std::string& file, std::ostream& out) {
    const PolytopeSpec spec = loadSpec(file);
    const auto vertices = enumerateVertices(spec);
    requireSimple(spec, vertices);
    const FVector f = fVector(buildFaceLattice(spec, vertices));
    out << "f: " << f.str() << "\n";
    out << "h: " << hFromF(f).str() << "\n";
    return 0;
}

int doBetti(const std::string& file, const std::optional<unsigned long long>& seedFlag,
            std::ostream& out) {
    const Analysis a = runAnalysis(loadSpec(file), resolveSeed(seedFlag));
    const bool agree = a.bettiH == a.mv.betti;
    out << "b: " << a.mv.betti.str() << (agree ? " (methods agree)" : " (METHODS DISAGREE)")
        << "\n";
    out << "rational: " << (a.rational ? "true" : "false") << "\n";
    return agree ? 0 : 5;
}

int doMorse(const std::string& file, const std::optional<unsigned long long>& seedFlag,
            std::ostream& out) {
    const PolytopeSpec spec = loadSpec(file);
    const unsigned long long seed = resolveSeed(seedFlag);
    const auto vertices = enumerateVertices(spec);
    requireSimple(spec, vertices);
    const FaceLattice lattice = buildFaceLattice(spec, vertices);
    const VecS dir = genericDirection(spec, vertices, seed);
    const MorseData md = morseData(spec, vertices, lattice, dir);
    out << "seed: " << seed << "\n";
    out << "direction:";
    for (Eigen::Index i = 0; i < dir.size(); ++i) out << ' ' << dir(i).str();
    out << "\n";
    for (size_t k = 0; k < md.entries.size(); ++k) {
        const MorseEntry& e = md.entries[k];
        const Vertex& v = vertices[static_cast<size_t>(e.vertexId)];
        out << "k=" << (k + 1) << " vertex {" << indexSetStr(v.active) << "} coords "
            << coordsDisplay(v.coords) << " height " << scalarDisplay(e.height) << " index "
            << e.index << " face " << indexSetStr(e.face) << " dim " << e.faceDim << "\n";
    }
    return 0;
}

int doGroup(const std::string& file, const std::string& vertexSpec, std::ostream& out) {
    const PolytopeSpec spec = loadSpec(file);
    const auto vertices = enumerateVertices(spec);
    requireSimple(spec, vertices);
    const IndexSet wanted = parseIndexSet(vertexSpec);
    const Vertex* vertex = nullptr;
    for (const Vertex& v : vertices)
        if (v.active == wanted) vertex = &v;
    if (!vertex) {
        std::string available;
        for (const Vertex& v : vertices) {
            if (!available.empty()) available += " ";
            available += "{" + indexSetStr(v.active) + "}";
        }
        throw UsageError("no vertex with active set {" + indexSetStr(wanted) +
                         "}; available: " + available);
    }
    const auto gens = gammaGenerators(spec, *vertex);
    const GroupStructure gs = gammaStructure(gens, spec.n, spec.field);
    out << "vertex {" << indexSetStr(wanted) << "} coords " << coordsDisplay(vertex->coords)
        << "\n";
    std::vector<int> labels;
    for (int j = 1; j <= spec.facetCount(); ++j)
        if (!std::binary_search(wanted.begin(), wanted.end(), j)) labels.push_back(j);
    for (size_t i = 0; i < gens.size(); ++i) {
        out << "  ";
        if (i < labels.size())
            out << "g_" << labels[i];
        else
            out << "q_" << (i - labels.size() + 1); // extra quasilattice generator
        out << " = ";
        for (Eigen::Index c = 0; c < gens[i].coords.size(); ++c) {
            if (c) out << ',';
            out << scalarDisplay(gens[i].coords(c));
        }
        out << "\n";
    }
    out << "structure: " << gs.isoStr();
    if (gs.kind == GroupStructure::Kind::Finite) out << " (finite, order " << gs.order << ")";
    if (gs.kind == GroupStructure::Kind::Infinite)
        out << " (infinite, free rank " << gs.freeRank << ")";
    out << "\n";
    return 0;
}

int doAtlas(const std::string& file, const std::optional<unsigned long long>& seedFlag,
            const std::string& outPath, std::ostream& out) {
    const Analysis a = runAnalysis(loadSpec(file), resolveSeed(seedFlag));
    const std::string doc = emitAtlas(a);
    if (outPath == "-") {
        out << doc;
        return 0;
    }
    std::ofstream f(outPath, std::ios::binary);
    if (!f) throw InternalError("cannot open output file \"" + outPath + "\"");
    f << doc;
    if (!f) throw InternalError("write failed for \"" + outPath + "\"");
    return 0;
}

int doExamples(const std::string& emitName, std::ostream& out) {
    if (!emitName.empty()) {
        out << fixtureByName(emitName).specText;
        return 0;
    }
    for (const Fixture& f : builtinFixtures()) {
        out << f.name;
        for (size_t i = f.name.size(); i < 22; ++i) out << ' ';
        out << f.description << "\n";
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact combinatorial and topological invariants of simple convex polytopes, "
                 "rational or not"};
    app.require_subcommand(1);

    std::string file, vertexSpec, outPath, emitName;
    std::optional<unsigned long long> seedFlag;
    int directions = 1;

    auto addSeed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seedFlag, "height-direction seed (default: QTORIC_SEED or 1)");
    };

    CLI::App* check = app.add_subcommand("check", "full pipeline, verify every invariant");
    check->add_option("file", file, "polytope spec file")->required();
    addSeed(check);
    check->add_option("--directions", directions, "number of generic directions to cross-check")
        ->check(CLI::PositiveNumber);

    CLI::App* hvec = app.add_subcommand("hvector", "f- and h-vectors");
    hvec->add_option("file", file, "polytope spec file")->required();

    CLI::App* betti = app.add_subcommand("betti", "Betti numbers by both methods");
    betti->add_option("file", file, "polytope spec file")->required();
    addSeed(betti);

    CLI::App* morse = app.add_subcommand("morse", "vertex order and Morse indices");
    morse->add_option("file", file, "polytope spec file")->required();
    addSeed(morse);

    CLI::App* group = app.add_subcommand("group", "chart group Gamma_nu at a vertex");
    group->add_option("file", file, "polytope spec file")->required();
    group->add_option("--vertex", vertexSpec, "active facet set, e.g. 1,3")->required();

    CLI::App* atlasCmd = app.add_subcommand("atlas", "emit the atlas document");
    atlasCmd->add_option("file", file, "polytope spec file")->required();
    addSeed(atlasCmd);
    atlasCmd->add_option("-o,--out", outPath, "output path ('-' for stdout)")->required();

    CLI::App* examples = app.add_subcommand("examples", "list builtin fixtures");
    examples->add_option("--emit", emitName, "print the spec file of a fixture");

    try {
        std::vector<const char*> argv;
        argv.push_back("qtoric");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (check->parsed()) return doCheck(file, seedFlag, directions, out);
        if (hvec->parsed()) return doHVector(file, out);
        if (betti->parsed()) return doBetti(file, seedFlag, out);
        if (morse->parsed()) return doMorse(file, seedFlag, out);
        if (group->parsed()) return doGroup(file, vertexSpec, out);
        if (atlasCmd->parsed()) return doAtlas(file, seedFlag, outPath, out);
        if (examples->parsed()) return doExamples(emitName, out);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const SpecParseError& e) {
        err << "spec error: " << e.what() << "\n";
        return 3;
    } catch (const GeometryError& e) {
        err << "geometry error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 5;
    }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace qtoric::cli
