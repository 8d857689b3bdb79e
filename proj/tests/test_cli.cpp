#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qtoric/cli.hpp"
#include "qtoric/fixtures.hpp"

using namespace qtoric;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult runCli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// writes a fixture spec to a temp file, removed on destruction
struct TempSpec {
    std::string path;

    explicit TempSpec(const std::string& contents, const std::string& tag) {
        path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
               "/qtoric-test-" + tag + ".poly";
        std::ofstream f(path);
        f << contents;
    }
    ~TempSpec() { std::remove(path.c_str()); }
};

TempSpec fixtureFile(const std::string& name) {
    return TempSpec(fixtureByName(name).specText, name);
}

} // namespace

TEST_CASE("no subcommand is a usage error") {
    CHECK(runCli({}).code == 2);
    CHECK(runCli({"frobnicate"}).code == 2);
    CHECK(runCli({"check"}).code == 2); // missing file
}

TEST_CASE("help exits zero") {
    CHECK(runCli({"--help"}).code == 0);
    CHECK(runCli({"check", "--help"}).code == 0);
}

TEST_CASE("hvector subcommand") {
    const TempSpec cube = fixtureFile("cube-3");
    const CliResult r = runCli({"hvector", cube.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("f: 8 12 6 1") != std::string::npos);
    CHECK(r.out.find("h: 1 3 3 1") != std::string::npos);
}

TEST_CASE("betti subcommand reports agreement and rationality") {
    const TempSpec golden = fixtureFile("golden-triangle");
    const CliResult r = runCli({"betti", golden.path, "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("b: 1 0 1 0 1 (methods agree)") != std::string::npos);
    CHECK(r.out.find("rational: false") != std::string::npos);

    const TempSpec cube = fixtureFile("cube-3");
    const CliResult rc = runCli({"betti", cube.path});
    CHECK(rc.code == 0);
    CHECK(rc.out.find("b: 1 0 3 0 3 0 1 (methods agree)") != std::string::npos);
    CHECK(rc.out.find("rational: true") != std::string::npos);
}

TEST_CASE("check passes on every simple fixture and rejects the pyramid") {
    for (const Fixture& fx : builtinFixtures()) {
        const TempSpec file(fx.specText, fx.name);
        const CliResult r = runCli({"check", file.path, "--seed", "3"});
        CAPTURE(fx.name);
        if (fx.name == "pyramid") {
            CHECK(r.code == 4);
            CHECK(r.err.find("lies on 4 facets") != std::string::npos);
            CHECK(r.err.find("not simple") != std::string::npos);
        } else {
            CHECK(r.code == 0);
            CHECK(r.out.find("check: PASS") != std::string::npos);
        }
    }
}

TEST_CASE("check with multiple directions") {
    const TempSpec dodeca = fixtureFile("dodecahedron");
    const CliResult r = runCli({"check", dodeca.path, "--seed", "2", "--directions", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("directions checked: 20") != std::string::npos);
}

TEST_CASE("geometry errors exit 4") {
    const TempSpec unbounded("dim 2\nfacet 1 0 | 0\nfacet 0 1 | 0\n", "unbounded");
    CHECK(runCli({"check", unbounded.path}).code == 4);

    const TempSpec empty("dim 2\nfacet 1 0 | 1\nfacet -1 0 | 0\nfacet 0 1 | 0\nfacet 0 -1 | -1\n",
                         "empty");
    CHECK(runCli({"check", empty.path}).code == 4);

    const TempSpec dup("dim 2\nfacet 1 0 | 0\nfacet 1 0 | 0\nfacet 0 1 | 0\nfacet -1 -1 | -1\n",
                       "dup");
    CHECK(runCli({"check", dup.path}).code == 4);
}

TEST_CASE("spec errors exit 3") {
    const TempSpec bad("dim 2\nfacet 1 0 | \n", "bad");
    CHECK(runCli({"hvector", bad.path}).code == 3);
    CHECK(runCli({"hvector", "/nonexistent/nowhere.poly"}).code == 3);
    const TempSpec badField("dim 2\nsqrt 12\nfacet 1 0 | 0\n", "badfield");
    CHECK(runCli({"hvector", badField.path}).code == 3);
}

TEST_CASE("morse subcommand prints the vertex table") {
    const TempSpec square = fixtureFile("cube-2");
    const CliResult r = runCli({"morse", square.path, "--seed", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("seed: 5") != std::string::npos);
    CHECK(r.out.find("direction:") != std::string::npos);
    CHECK(r.out.find("k=1") != std::string::npos);
    CHECK(r.out.find("k=4") != std::string::npos);
    CHECK(r.out.find("index 0") != std::string::npos);
    CHECK(r.out.find("index 2") != std::string::npos);
}

TEST_CASE("group subcommand addresses vertices by active set") {
    const TempSpec wt = fixtureFile("weighted-triangle-2");
    const CliResult r = runCli({"group", wt.path, "--vertex", "1,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("g_2 = 1/2(~0.5),1/2(~0.5)") != std::string::npos);
    CHECK(r.out.find("structure: Z/2 (finite, order 2)") != std::string::npos);

    const CliResult trivial = runCli({"group", wt.path, "--vertex", "1,2"});
    CHECK(trivial.out.find("structure: trivial") != std::string::npos);

    const CliResult missing = runCli({"group", wt.path, "--vertex", "1,5"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("available") != std::string::npos);

    const TempSpec golden = fixtureFile("golden-triangle");
    const CliResult g = runCli({"group", golden.path, "--vertex", "1,3"});
    CHECK(g.code == 0);
    CHECK(g.out.find("structure: Z^1 (infinite, free rank 1)") != std::string::npos);
    // vertex coordinate 1/phi and the canonical generator representative
    CHECK(g.out.find("-1/2+1/2s(~0.618034)") != std::string::npos);
    CHECK(g.out.find("g_2 = 3/2-1/2s(~0.381966),3/2-1/2s(~0.381966)") != std::string::npos);
}

TEST_CASE("group subcommand labels extra quasilattice generators") {
    const TempSpec spec("dim 2\n"
                        "facet 1 0 | 0\n"
                        "facet 0 1 | 0\n"
                        "facet -1 -1 | -1\n"
                        "qgen 1/2 1/2\n",
                        "qgen");
    const CliResult r = runCli({"group", spec.path, "--vertex", "1,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("q_1 = 1/2(~0.5),1/2(~0.5)") != std::string::npos);
    CHECK(r.out.find("structure: Z/2 (finite, order 2)") != std::string::npos);
}

TEST_CASE("atlas output is byte-identical across runs") {
    const TempSpec golden = fixtureFile("golden-triangle");
    const CliResult r1 = runCli({"atlas", golden.path, "--seed", "7", "-o", "-"});
    const CliResult r2 = runCli({"atlas", golden.path, "--seed", "7", "-o", "-"});
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("[betti]") != std::string::npos);

    const std::string outPath = golden.path + ".atlas";
    const CliResult r3 = runCli({"atlas", golden.path, "--seed", "7", "-o", outPath});
    CHECK(r3.code == 0);
    std::ifstream f(outPath);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == r1.out);
    std::remove(outPath.c_str());
}

TEST_CASE("examples lists and emits fixtures") {
    const CliResult list = runCli({"examples"});
    CHECK(list.code == 0);
    for (const Fixture& fx : builtinFixtures())
        CHECK(list.out.find(fx.name) != std::string::npos);

    const CliResult emit = runCli({"examples", "--emit", "golden-triangle"});
    CHECK(emit.code == 0);
    CHECK(emit.out == fixtureByName("golden-triangle").specText);

    CHECK(runCli({"examples", "--emit", "no-such-fixture"}).code == 3);
}

TEST_CASE("QTORIC_SEED is the default seed and the flag overrides it") {
    const TempSpec square = fixtureFile("cube-2");
    setenv("QTORIC_SEED", "9", 1);
    const CliResult env = runCli({"morse", square.path});
    CHECK(env.out.find("seed: 9") != std::string::npos);
    const CliResult flag = runCli({"morse", square.path, "--seed", "4"});
    CHECK(flag.out.find("seed: 4") != std::string::npos);
    setenv("QTORIC_SEED", "junk", 1);
    CHECK(runCli({"morse", square.path}).code == 2);
    unsetenv("QTORIC_SEED");
    const CliResult fallback = runCli({"morse", square.path});
    CHECK(fallback.out.find("seed: 1") != std::string::npos);
}

TEST_CASE("check report carries the full table") {
    const TempSpec golden = fixtureFile("golden-triangle");
    const CliResult r = runCli({"check", golden.path, "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("spec: qtoric-test-golden-triangle") != std::string::npos);
    CHECK(r.out.find("field: Q(sqrt 5)") != std::string::npos);
    CHECK(r.out.find("simple: yes") != std::string::npos);
    CHECK(r.out.find("f-vector: 3 3 1") != std::string::npos);
    CHECK(r.out.find("h-vector (from f): 1 1 1") != std::string::npos);
    CHECK(r.out.find("rational: no (zrank 3 > n = 2)") != std::string::npos);
    CHECK(r.out.find("betti (from h): 1 0 1 0 1") != std::string::npos);
    CHECK(r.out.find("betti (mayer-vietoris): 1 0 1 0 1") != std::string::npos);
    CHECK(r.out.find("euler characteristic: 3") != std::string::npos);
}

