#include <doctest.h>

#include "cli.hh"

#include <ecswitch/graph_io.hh>
#include <ecswitch/group_spec.hh>
#include <ecswitch/homomorphism.hh>
#include <ecswitch/property_t.hh>
#include <ecswitch/sequence_io.hh>
#include <ecswitch/structure.hh>
#include <ecswitch/switching.hh>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ecswitch;

namespace
{
    struct Result
    {
        int code;
        std::string out;
        std::string err;
    };

    auto run(std::vector<std::string> args) -> Result
    {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return Result{code, out.str(), err.str()};
    }

    auto scratch(const std::string & name) -> std::string
    {
        auto dir = std::filesystem::path(ECSWITCH_SCRATCH_DIR) / "cli_scratch";
        std::filesystem::create_directories(dir);
        return (dir / name).string();
    }

    auto write(const std::string & name, const std::string & text) -> std::string
    {
        auto path = scratch(name);
        std::ofstream(path) << text;
        return path;
    }

    auto slurp(const std::string & path) -> std::string
    {
        return read_text_file(path);
    }

    const std::string mono_triangle = "m 3\nvertices 3\nedge 0 1 1\nedge 0 2 1\nedge 1 2 1\n";
    const std::string triangle_112 = "m 3\nvertices 3\nedge 0 1 1\nedge 0 2 1\nedge 1 2 2\n";
    const std::string triangle_221 = "m 3\nvertices 3\nedge 0 1 2\nedge 0 2 2\nedge 1 2 1\n";
    const std::string rainbow = "m 3\nvertices 3\nedge 0 1 1\nedge 0 2 2\nedge 1 2 3\n";
    const std::string s2_112 = "m 2\nvertices 3\nedge 0 1 1\nedge 0 2 1\nedge 1 2 2\n";
    const std::string s2_111 = "m 2\nvertices 3\nedge 0 1 1\nedge 0 2 1\nedge 1 2 1\n";
    const std::string s2_221 = "m 2\nvertices 3\nedge 0 1 2\nedge 0 2 2\nedge 1 2 1\n";
    const std::string c5 = "m 3\nvertices 5\nedge 0 1 1\nedge 1 2 1\nedge 2 3 1\nedge 3 4 1\nedge 0 4 1\n";
    const std::string c4_1112 = "m 4\nvertices 4\nedge 0 1 1\nedge 1 2 1\nedge 2 3 1\nedge 0 3 2\n";
    const std::string c4_1313 = "m 4\nvertices 4\nedge 0 1 1\nedge 1 2 3\nedge 2 3 1\nedge 0 3 3\n";
}

TEST_CASE("equiv")
{
    auto a = write("mono.ecg", mono_triangle);
    CHECK(run({"equiv", a, a, "--group", "S3"}).code == 0);

    auto b = write("s2_112.ecg", s2_112), c = write("s2_111.ecg", s2_111);
    auto no = run({"equiv", b, c, "--group", "gens2:(1 2)", "--oracle"});
    CHECK(no.code == 1);
    CHECK(no.out.find("verdict: no") != std::string::npos);
    CHECK(no.out.find("oracle: no") != std::string::npos);

    auto bad = write("bad.ecg", "m 3\nvertices 3\nedge 0 0 1\n");
    auto parse = run({"equiv", bad, a, "--group", "S3"});
    CHECK(parse.code == 2);
    CHECK(parse.err.find("line 3") != std::string::npos);

    CHECK(run({"equiv", a, a, "--group", "S4"}).code == 2);
    CHECK(run({"equiv", a, a, "--group", "Q3"}).code == 2);
    CHECK(run({"equiv", a, "/nonexistent.ecg", "--group", "S3"}).code == 2);
    CHECK(run({"equiv", a}).code == 2);
}

TEST_CASE("equiv witness file replays")
{
    auto g = write("t112.ecg", triangle_112), h = write("mono.ecg", mono_triangle);
    auto witness = scratch("equiv.seq");
    auto r = run({"equiv", g, h, "--group", "S3", "--oracle", "--witness", witness});
    REQUIRE(r.code == 0);
    auto text = slurp(witness);
    auto map = parse_map_comment(text);
    REQUIRE(map);

    auto applied = run({"apply", g, witness});
    REQUIRE(applied.code == 0);
    CHECK(is_coloured_isomorphism(parse_ecg(applied.out), parse_ecg(mono_triangle), *map));
}

TEST_CASE("budget exhaustion exits 3")
{
    std::string k5 = "m 5\nvertices 5\n";
    for (int u = 0 ; u < 5 ; ++u)
        for (int v = u + 1 ; v < 5 ; ++v)
            k5 += "edge " + std::to_string(u) + " " + std::to_string(v) + " 1\n";
    auto g = write("k5.ecg", k5);
    auto path = write("p5.ecg", "m 5\nvertices 5\nedge 0 1 1\nedge 1 2 1\nedge 2 3 1\nedge 3 4 1\n");
    auto r = run({"equiv", g, path, "--group", "Z5", "--oracle", "--budget", "10"});
    CHECK(r.code == 3);
    CHECK(run({"oracle", g, "--group", "S5", "--budget", "10"}).code == 3);
    CHECK(run({"equiv", g, g, "--group", "Z5", "--budget", "0"}).code == 2);
    CHECK(run({"hom", g, path, "--group", "Z5", "--budget", "10"}).code == 3);
}

TEST_CASE("mono")
{
    auto g = write("rainbow.ecg", rainbow);
    auto witness = scratch("mono.seq");
    auto r = run({"mono", g, "--group", "S3", "--colour", "1", "--witness", witness});
    REQUIRE(r.code == 0);
    auto steps = parse_sequence(slurp(witness), 3);
    CHECK(steps.size() <= 8);
    auto applied = run({"apply", g, witness});
    CHECK(is_monochromatic(parse_ecg(applied.out), 1));

    auto d4 = write("c4_1112.ecg", c4_1112);
    auto lacking = run({"mono", d4, "--group", "D4", "--colour", "1"});
    CHECK(lacking.code == 1);
    CHECK(lacking.out.find("failing colour: 2") != std::string::npos);

    auto already = run({"mono", write("mono.ecg", mono_triangle), "--group", "S3", "--colour", "1", "--witness", witness});
    CHECK(already.code == 0);
    CHECK(parse_sequence(slurp(witness), 3).empty());

    CHECK(run({"mono", g, "--group", "S3", "--colour", "4"}).code == 2);
}

TEST_CASE("apply")
{
    auto edge = write("edge.ecg", "m 3\nvertices 2\nedge 0 1 1\n");
    auto seq = write("order.seq", "0 (1 2)\n1 (2 3)\n0 (1 2)\n");
    auto r = run({"apply", edge, seq});
    CHECK(r.code == 0);
    CHECK(r.out == "m 3\nvertices 2\nedge 0 1 3\n");

    auto g = write("t112_comments.ecg", "# comment\n" + triangle_112);
    auto empty = write("empty.seq", "# nothing\n");
    CHECK(run({"apply", g, empty}).out == triangle_112);

    CHECK(run({"apply", g, write("far.seq", "7 (1 2)\n")}).code == 2);
    CHECK(run({"apply", g, write("garbled.seq", "0 (1 5)\n")}).code == 2);
}

TEST_CASE("kcol and hom")
{
    auto g = write("c5.ecg", c5);
    CHECK(run({"kcol", g, "--group", "S3", "--k", "3", "--oracle"}).code == 0);
    CHECK(run({"kcol", g, "--group", "S3", "--k", "2", "--oracle"}).code == 1);
    CHECK(run({"kcol", write("c4_1112.ecg", c4_1112), "--group", "D4", "--k", "2", "--oracle"}).code == 1);

    auto witness = scratch("kcol.seq");
    auto yes = run({"kcol", write("c4_1313.ecg", c4_1313), "--group", "D4", "--k", "2", "--oracle", "--witness", witness});
    CHECK(yes.code == 0);
    CHECK(yes.out.find("target:") != std::string::npos);
    CHECK(parse_map_comment(slurp(witness)).has_value());

    auto a = write("s2_112.ecg", s2_112), b = write("s2_221.ecg", s2_221);
    CHECK(run({"hom", a, b, "--group", "gens2:(1 2)", "--oracle"}).code == 1);
    auto s3 = run({"hom", write("t112.ecg", triangle_112), write("t221.ecg", triangle_221), "--group", "S3", "--oracle"});
    CHECK(s3.code == 0);
    CHECK(s3.out.find("method: PropertyT-FastPath") != std::string::npos);
    CHECK(run({"kcol", g, "--group", "S3", "--k", "0"}).code == 2);
}

TEST_CASE("gen")
{
    auto first = run({"gen", "--vertices", "5", "--edges", "6", "--m", "4", "--seed", "1"});
    auto second = run({"gen", "--vertices", "5", "--edges", "6", "--m", "4", "--seed", "1"});
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(parse_ecg(first.out).size() == 6);

    CHECK(run({"gen", "--vertices", "3", "--edges", "4", "--m", "2", "--seed", "1"}).code == 2);
    CHECK(run({"gen", "--vertices", "1", "--edges", "0", "--m", "2", "--seed", "1"}).out == "m 2\nvertices 1\n");

    auto path = scratch("gen.ecg");
    CHECK(run({"gen", "-n", "4", "-e", "3", "--m", "3", "--seed", "9", "-o", path}).code == 0);
    CHECK(parse_ecg(slurp(path)).order() == 4);
}

TEST_CASE("oracle statistics")
{
    auto r = run({"oracle", write("s2_111.ecg", s2_111), "--group", "S2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("signatures: 4") != std::string::npos);
    CHECK(r.out.find("monochromatic colours: 1\n") != std::string::npos);
    auto gens = run({"oracle", write("s2_111.ecg", s2_111), "--group", "S2", "--generators-only"});
    CHECK(gens.out.find("signatures: 4") != std::string::npos);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
