#include "illum/io.hpp"
#include "illum/svg.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using namespace illum;

namespace {

std::filesystem::path tmp_file(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

#ifdef ILLUM_CLI_PATH
int run_cli(const std::string& args) {
    std::string cmd = std::string(ILLUM_CLI_PATH) + " " + args + " >/dev/null 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}
#endif

}  // namespace

TEST_CASE("shape round trip") {
    ShapeDoc poly;
    poly.kind = ShapeDoc::Kind::Polygon;
    poly.vertices = {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(1), Rat(3, 2)}};
    auto text = serialize_shape(poly).dump();
    auto back = parse_shape(text);
    CHECK(back.kind == ShapeDoc::Kind::Polygon);
    REQUIRE(back.vertices.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(back.vertices[i] == poly.vertices[i]);

    ShapeDoc disc;
    disc.kind = ShapeDoc::Kind::Disc;
    disc.radius = Rat(5, 3);
    CHECK(parse_shape(serialize_shape(disc).dump()).radius == disc.radius);

    ShapeDoc box;
    box.kind = ShapeDoc::Kind::Box;
    box.n = 3;
    box.half_widths = {Rat(1), Rat(2), Rat(1, 2)};
    auto b2 = parse_shape(serialize_shape(box).dump());
    CHECK(b2.n == 3);
    CHECK(b2.half_widths == box.half_widths);

    ShapeDoc ngon;
    ngon.kind = ShapeDoc::Kind::RegularNgon;
    ngon.n = 7;
    ngon.circumradius = Rat(2);
    auto n2 = parse_shape(serialize_shape(ngon).dump());
    CHECK(n2.n == 7);
    CHECK(n2.circumradius == Rat(2));
}

TEST_CASE("strict shape parsing") {
    auto parse = [](const std::string& text) { return parse_shape(text); };
    CHECK_THROWS_AS(parse("not json"), parse_error);
    CHECK_THROWS_AS(parse("[1,2]"), parse_error);
    CHECK_THROWS_AS(parse(R"({"kind":"wedge"})"), parse_error);
    CHECK_THROWS_AS(parse(R"({"kind":"polygon"})"), parse_error);
    CHECK_THROWS_AS(parse(R"({"kind":"polygon","vertices":[["0","0"],["1","0"]]})"),
                    parse_error);
    // Zero denominator is rejected, not normalized.
    CHECK_THROWS_AS(
        parse(R"({"kind":"polygon","vertices":[["1/0","0"],["1","0"],["0","1"]]})"),
        parse_error);
    // Rationals must be strings, not JSON numbers.
    CHECK_THROWS_AS(parse(R"({"kind":"disc","radius":1})"), parse_error);
    CHECK_THROWS_AS(parse(R"({"kind":"disc","radius":"-2"})"), parse_error);
    // Unknown fields are rejected.
    CHECK_THROWS_AS(parse(R"({"kind":"disc","radius":"1","extra":true})"), parse_error);
    CHECK_THROWS_AS(parse(R"({"kind":"disc","radius":"1","schema_version":"9"})"),
                    parse_error);
    CHECK_THROWS_AS(parse(R"({"kind":"box","n":2,"half_widths":["1"]})"), parse_error);
}

TEST_CASE("certificate round trip") {
    CertificateDoc c;
    c.shape.kind = ShapeDoc::Kind::Polygon;
    c.shape.vertices = {{Rat(-1), Rat(-1)}, {Rat(1), Rat(-1)}, {Rat(1), Rat(1)}, {Rat(-1), Rat(1)}};
    c.eps = EpsSpec::radius_multiple(Rat(1));
    c.mode = Mode::Closed;
    c.verdict = "finite";
    Quad r2 = Quad::sqrt_of(Rat(2));
    c.translations = {{Quad(Rat(1)), Quad(Rat(1))}, {r2, Quad(Rat(0))}};
    auto text = serialize_certificate(c).dump();
    auto back = parse_certificate(text);
    CHECK(back.verdict == "finite");
    CHECK(back.eps.kind == EpsSpec::Kind::CircumradiusMultiple);
    CHECK(back.eps.value == Rat(1));
    CHECK(back.mode == Mode::Closed);
    REQUIRE(back.translations.size() == 2);
    CHECK(back.translations[0].x == Quad(Rat(1)));
    CHECK(back.translations[1].x == r2);

    CertificateDoc w;
    w.shape = c.shape;
    w.eps = EpsSpec::exact(Rat(3, 2));
    w.mode = Mode::Interior;
    w.verdict = "infinite";
    w.witness = V2<Rat>{Rat(0), Rat(0)};
    auto back2 = parse_certificate(serialize_certificate(w).dump());
    CHECK(back2.verdict == "infinite");
    REQUIRE(back2.witness);
    CHECK(*back2.witness == *w.witness);

    CHECK_THROWS_AS(parse_certificate("{}"), parse_error);
    CHECK_THROWS_AS(
        parse_certificate(
            R"({"shape":{"kind":"disc","radius":"1"},"eps":{"kind":"exact","value":"1"},"mode":"closed","verdict":"maybe"})"),
        parse_error);
    CHECK_THROWS_AS(
        parse_certificate(
            R"({"shape":{"kind":"disc","radius":"1"},"eps":{"kind":"exact","value":"1"},"mode":"closed","verdict":"finite"})"),
        parse_error);
}

TEST_CASE("svg rendering is deterministic") {
    SvgScene scene;
    scene.body = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    scene.has_circle = true;
    scene.r = 1.4142;
    scene.translates = {{{-2, -2}, {0, -2}, {0, 0}, {-2, 0}}};
    auto a = render_svg(scene);
    auto b = render_svg(scene);
    CHECK(a == b);
    CHECK(a.find("<svg") == 0);
    CHECK(a.find("<circle") != std::string::npos);
    CHECK(a.find("-0.0000") == std::string::npos);  // negative zero normalized
}

#ifdef ILLUM_CLI_PATH
TEST_CASE("cli exit codes") {
    auto square = tmp_file("illum_cli_square.json",
                           R"({"kind":"polygon","vertices":[["-1","-1"],["1","-1"],["1","1"],["-1","1"]]})");
    auto broken = tmp_file("illum_cli_broken.json", R"({"kind":"polygon"})");
    auto cert = std::filesystem::temp_directory_path() / "illum_cli_cert.json";

    CHECK(run_cli("numbers " + square.string()) == 0);
    CHECK(run_cli("finiteness " + square.string()) == 0);
    CHECK(run_cli("circumball " + square.string()) == 0);
    CHECK(run_cli("quantified " + square.string() + " --eps R --cert " + cert.string()) == 0);
    CHECK(run_cli("verify " + cert.string()) == 0);

    // A tampered certificate fails verification with exit 1.
    auto cert_text = [&] {
        std::ifstream in(cert);
        std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return s;
    }();
    auto doc = json::parse(cert_text);
    doc["translations"] = json::array({json::array({"2", "0"}), json::array({"0", "2"})});
    auto bad_cert = tmp_file("illum_cli_bad_cert.json", doc.dump());
    CHECK(run_cli("verify " + bad_cert.string()) == 1);

    // Usage and parse failures exit 2.
    CHECK(run_cli("numbers " + broken.string()) == 2);
    CHECK(run_cli("numbers /nonexistent/shape.json") == 2);
    CHECK(run_cli("quantified " + square.string() + " --eps R --mode sideways") == 2);
    CHECK(run_cli("nosuchcommand") == 2);

    auto svg_out = std::filesystem::temp_directory_path() / "illum_cli_out.svg";
    CHECK(run_cli("svg " + square.string() + " --out " + svg_out.string() + " --cert " +
                  cert.string()) == 0);
    CHECK(std::filesystem::file_size(svg_out) > 0);
}
#endif
