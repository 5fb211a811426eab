#include "illum/io.hpp"
#include "illum/oracle.hpp"
#include "illum/quantified.hpp"
#include "illum/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace illum;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// eps spec syntax: "p/q" for an exact length, "R" or "p/qR" for a multiple
// of the circumradius.
EpsSpec parse_eps(const std::string& text) {
    if (!text.empty() && (text.back() == 'R' || text.back() == 'r')) {
        std::string head = text.substr(0, text.size() - 1);
        if (!head.empty() && head.back() == '*') head.pop_back();
        return EpsSpec::radius_multiple(head.empty() ? Rat(1) : parse_rat(head));
    }
    return EpsSpec::exact(parse_rat(text));
}

json base_report(const std::string& command) {
    return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

void emit(const json& report, const std::string& human) {
    std::cerr << human << "\n";
    std::cout << report.dump(2) << "\n";
}

template <class F>
auto with_poly(const PolyBody& body, F&& f) {
    if (body.rat) return f(*body.rat);
    return f(*body.quad);
}

template <class S>
json circle_report(const CircleSq<S>& B) {
    return json{{"center", {quad_to_json(lift(B.center).x), quad_to_json(lift(B.center).y)}},
                {"radius_sq", quad_to_json(Quad(B.radius_sq))}};
}

int cmd_circumball(const std::string& shape_path) {
    ShapeDoc s = parse_shape(read_file(shape_path));
    json rep = base_report("circumball");
    if (s.kind == ShapeDoc::Kind::Disc) {
        rep["center"] = {rat_to_json(Rat(0)), rat_to_json(Rat(0))};
        rep["radius_sq"] = rat_to_json(s.radius * s.radius);
        emit(rep, "circumball: center (0, 0), radius " + to_string(s.radius));
        return kExitOk;
    }
    if (s.kind == ShapeDoc::Kind::RegularNgon) {
        rep["center"] = {rat_to_json(Rat(0)), rat_to_json(Rat(0))};
        rep["radius_sq"] = rat_to_json(s.circumradius * s.circumradius);
        emit(rep, "circumball: center (0, 0), radius " + to_string(s.circumradius));
        return kExitOk;
    }
    PolyBody body = materialize_polygon(s);
    if (!body.available()) {
        std::cerr << "circumball: unsupported shape for planar computation\n";
        return kExitUsage;
    }
    with_poly(body, [&](const auto& K) {
        auto B = circumball(K);
        rep.update(circle_report(B));
        rep["contact_count"] = contact_set(K, B).size();
        return 0;
    });
    emit(rep, "circumball computed");
    return kExitOk;
}

int cmd_numbers(const std::string& shape_path) {
    ShapeDoc s = parse_shape(read_file(shape_path));
    json rep = base_report("numbers");
    std::string human;
    if (s.kind == ShapeDoc::Kind::Disc) {
        rep["i"] = 3;
        rep["c"] = 3;
        rep["t"] = {{"lo", 3}, {"hi", 3}};
        human = "numbers: i=3 c=3 t in [3,3] (disc, closed form)";
        emit(rep, human);
        return kExitOk;
    }
    if (s.kind == ShapeDoc::Kind::RegularNgon && !regular_ngon_representable(s.n)) {
        auto n = static_cast<unsigned>(s.n);
        rep["i"] = regular_number_i(n);
        rep["c"] = regular_number_c(n);
        human = "numbers: i=" + std::to_string(regular_number_i(n)) +
                " c=" + std::to_string(regular_number_c(n)) +
                " (t bounds need exact coordinates; unavailable for this n)";
        emit(rep, human);
        return kExitOk;
    }
    PolyBody body = materialize_polygon(s);
    if (!body.available()) {
        std::cerr << "numbers: unsupported shape for planar computation\n";
        return kExitUsage;
    }
    with_poly(body, [&](const auto& K) {
        auto ni = number_i(K);
        auto nc = number_c(K);
        auto tb = number_t_bounds(K);
        rep["i"] = ni.value;
        rep["c"] = nc.value;
        rep["t"] = {{"lo", tb.lo}, {"hi", tb.hi}};
        human = "numbers: i=" + std::to_string(ni.value) + " c=" + std::to_string(nc.value) +
                " t in [" + std::to_string(tb.lo) + "," + std::to_string(tb.hi) + "]";
        return 0;
    });
    emit(rep, human);
    return kExitOk;
}

int cmd_finiteness(const std::string& shape_path) {
    ShapeDoc s = parse_shape(read_file(shape_path));
    json rep = base_report("finiteness");
    if (s.kind == ShapeDoc::Kind::Disc) {
        rep["finite_at_circumradius"] = true;
        emit(rep, "finiteness: true (disc, closed form)");
        return kExitOk;
    }
    if (s.kind == ShapeDoc::Kind::RegularNgon && !regular_ngon_representable(s.n)) {
        bool v = regular_finite_at_circumradius(static_cast<unsigned>(s.n));
        rep["finite_at_circumradius"] = v;
        emit(rep, std::string("finiteness: ") + (v ? "true" : "false"));
        return kExitOk;
    }
    PolyBody body = materialize_polygon(s);
    if (!body.available()) {
        std::cerr << "finiteness: unsupported shape for planar computation\n";
        return kExitUsage;
    }
    bool verdict = false;
    with_poly(body, [&](const auto& K) {
        auto cert = finite_at_circumradius(K);
        verdict = cert.verdict;
        rep["finite_at_circumradius"] = cert.verdict;
        rep["contact_count"] = cert.contact_vertices.size();
        if (cert.gap_witness)
            rep["gap_direction"] = {quad_to_json(cert.gap_witness->x()),
                                    quad_to_json(cert.gap_witness->y())};
        return 0;
    });
    emit(rep, std::string("finiteness: ") + (verdict ? "true" : "false"));
    return kExitOk;
}

template <class S>
json count_to_json(const CountResult<S>& r) {
    json j;
    switch (r.verdict) {
        case CountResult<S>::Verdict::Finite: {
            j["verdict"] = "finite";
            j["count"] = r.count;
            json ts = json::array();
            for (const auto& t : r.certificate) ts.push_back({quad_to_json(t.x), quad_to_json(t.y)});
            j["translations"] = ts;
            break;
        }
        case CountResult<S>::Verdict::Infinite:
            j["verdict"] = "infinite";
            if (r.witness)
                j["witness"] = {quad_to_json(lift(*r.witness).x), quad_to_json(lift(*r.witness).y)};
            break;
        case CountResult<S>::Verdict::LowerBound:
            j["verdict"] = "lower_bound";
            j["lower_bound"] = r.count;
            break;
    }
    return j;
}

int cmd_quantified(const std::string& shape_path, const std::string& eps_text,
                   const std::string& mode_text, const std::string& cert_path) {
    ShapeDoc s = parse_shape(read_file(shape_path));
    EpsSpec eps = parse_eps(eps_text);
    Mode mode;
    if (mode_text == "closed")
        mode = Mode::Closed;
    else if (mode_text == "open")
        mode = Mode::Interior;
    else {
        std::cerr << "quantified: --mode must be closed or open\n";
        return kExitUsage;
    }
    json rep = base_report("quantified");
    CertificateDoc cert;
    cert.shape = s;
    cert.eps = eps;
    cert.mode = mode;

    if (s.kind == ShapeDoc::Kind::Disc) {
        if (eps.kind != EpsSpec::Kind::ExactRational && eps.value != 1) {
            // R-multiples reduce to exact lengths for the disc.
            eps = EpsSpec::exact(eps.value * s.radius);
        }
        Rat e = eps.kind == EpsSpec::Kind::ExactRational ? eps.value : s.radius;
        auto d = disc_quantified(s.radius, e, mode);
        if (d.finite) {
            rep["verdict"] = "finite";
            rep["count"] = d.count;
            json ts = json::array();
            for (const auto& t : d.certificate) ts.push_back({quad_to_json(t.x), quad_to_json(t.y)});
            rep["translations"] = ts;
            cert.verdict = "finite";
            cert.translations = d.certificate;
        } else {
            rep["verdict"] = "infinite";
            rep["witness"] = {rat_to_json(Rat(0)), rat_to_json(Rat(0))};
            cert.verdict = "infinite";
            cert.witness = V2<Rat>{Rat(0), Rat(0)};
        }
    } else {
        PolyBody body = materialize_polygon(s);
        if (!body.available()) {
            std::cerr << "quantified: exact computation needs a representable shape "
                         "(regular n-gons only for n in {3, 4, 6})\n";
            return kExitUsage;
        }
        with_poly(body, [&](const auto& K) {
            auto r = quantified_count(K, eps, mode);
            rep.update(count_to_json(r));
            using R = std::decay_t<decltype(r)>;
            if (r.verdict == R::Verdict::Finite) {
                cert.verdict = "finite";
                cert.translations = r.certificate;
            } else if (r.verdict == R::Verdict::Infinite && r.witness) {
                auto w = lift(*r.witness);
                // Certificates carry rational witnesses only; irrational
                // ones stay in the report.
                if (w.x.is_rational() && w.y.is_rational()) {
                    cert.verdict = "infinite";
                    cert.witness = V2<Rat>{w.x.rational(), w.y.rational()};
                }
            }
            return 0;
        });
    }
    if (!cert_path.empty() && !cert.verdict.empty()) {
        std::ofstream out(cert_path);
        out << serialize_certificate(cert).dump(2) << "\n";
        rep["certificate_path"] = cert_path;
    }
    emit(rep, "quantified: " + rep["verdict"].get<std::string>());
    return kExitOk;
}

template <class S>
bool verify_finite(const ConvexPolygon<S>& K, const EpsSpec& eps, Mode mode,
                   const std::vector<V2<Quad>>& ts) {
    auto B = circumball(K);
    Quad eps_sq{Quad(eps.eps_sq(B))};
    for (const auto& t : ts)
        if (!(t.x * t.x + t.y * t.y == eps_sq)) return false;
    auto fld = detail::joint_field(ts);
    if (!fld) return false;
    std::vector<V2<S>> native;
    bool fits = true;
    for (const auto& t : ts) {
        auto v = detail::quad_vec_to<S>(-t);
        if (!v) {
            fits = false;
            break;
        }
        native.push_back(*v);
    }
    if (fits) return cover_residual(K, native, mode).covered;
    if constexpr (std::is_same_v<S, Rat>) {
        auto Kq = detail::lift_polygon(K);
        std::vector<V2<Quad>> cov;
        for (const auto& t : ts) cov.push_back(-t);
        return cover_residual(Kq, cov, mode).covered;
    } else {
        return false;
    }
}

template <class S>
bool verify_infinite(const ConvexPolygon<S>& K, const EpsSpec& eps, Mode mode, const V2<Rat>& w) {
    V2<S> x{S(w.x), S(w.y)};
    if (!contains(K, x, Mode::Closed)) return false;
    auto B = circumball(K);
    S eps_sq = eps.eps_sq(B);
    return circle_polygon_arcs_rounded(K, x, eps_sq, mode, 128).family.empty();
}

int cmd_verify(const std::string& cert_path) {
    CertificateDoc c = parse_certificate(read_file(cert_path));
    json rep = base_report("verify");
    bool ok = false;
    if (c.shape.kind == ShapeDoc::Kind::Disc) {
        Rat e = c.eps.kind == EpsSpec::Kind::ExactRational ? c.eps.value
                                                           : c.eps.value * c.shape.radius;
        auto d = disc_quantified(c.shape.radius, e, c.mode);
        ok = (c.verdict == "finite") == d.finite;
        if (ok && d.finite && c.translations.size() != d.count) ok = false;
    } else {
        PolyBody body = materialize_polygon(c.shape);
        if (!body.available()) {
            std::cerr << "verify: unsupported shape\n";
            return kExitUsage;
        }
        ok = with_poly(body, [&](const auto& K) {
            if (c.verdict == "finite") return verify_finite(K, c.eps, c.mode, c.translations);
            return verify_infinite(K, c.eps, c.mode, *c.witness);
        });
    }
    rep["valid"] = ok;
    emit(rep, std::string("verify: ") + (ok ? "valid" : "INVALID"));
    return ok ? kExitOk : kExitNegative;
}

int cmd_svg(const std::string& shape_path, const std::string& out_path,
            const std::string& cert_path) {
    ShapeDoc s = parse_shape(read_file(shape_path));
    SvgScene scene;
    if (s.kind == ShapeDoc::Kind::Disc) {
        scene.has_circle = true;
        scene.r = to_double(s.radius);
        // body rendered as the circle itself: approximate by the circle only
    } else {
        PolyBody body = materialize_polygon(s);
        if (!body.available()) {
            std::cerr << "svg: unsupported shape\n";
            return kExitUsage;
        }
        with_poly(body, [&](const auto& K) {
            for (const auto& v : K.vertices())
                scene.body.push_back({to_double(v.x), to_double(v.y)});
            auto B = circumball(K);
            scene.has_circle = true;
            scene.cx = to_double(B.center.x);
            scene.cy = to_double(B.center.y);
            scene.r = std::sqrt(to_double(B.radius_sq));
            return 0;
        });
    }
    if (!cert_path.empty()) {
        CertificateDoc c = parse_certificate(read_file(cert_path));
        for (const auto& t : c.translations) {
            std::vector<std::pair<double, double>> poly;
            double dx = -to_double(t.x), dy = -to_double(t.y);
            for (const auto& p : scene.body) poly.push_back({p.first + dx, p.second + dy});
            if (!poly.empty()) scene.translates.push_back(std::move(poly));
        }
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "svg: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    out << render_svg(scene);
    json rep = base_report("svg");
    rep["out"] = out_path;
    emit(rep, "svg written to " + out_path);
    return kExitOk;
}

int cmd_selftest(std::uint64_t seed) {
    SampleConfig cfg;
    cfg.seed = seed;
    cfg.grid_resolution = 64;
    bool ok = true;
    auto check = [&](bool c, const char* what) {
        std::cerr << (c ? "  ok  " : " FAIL ") << what << "\n";
        ok = ok && c;
    };

    auto Sq = make_polygon<Rat>(
        {{Rat(-1), Rat(-1)}, {Rat(1), Rat(-1)}, {Rat(1), Rat(1)}, {Rat(-1), Rat(1)}});
    check(number_i(Sq).value == 2, "square i = 2");
    check(number_c(Sq).value == 4, "square c = 4");

    auto Rect = make_polygon<Rat>(
        {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(2), Rat(1)}, {Rat(0), Rat(1)}});
    auto qr = quantified_count(Rect, EpsSpec::radius_multiple(Rat(1)), Mode::Closed);
    check(qr.verdict == CountResult<Rat>::Verdict::Finite && qr.count == 4,
          "rectangle finite(4) at eps = R");

    auto Hex = regular_hexagon(Rat(1));
    auto qh = quantified_count(Hex, EpsSpec::radius_multiple(Rat(1)), Mode::Closed);
    check(qh.verdict == CountResult<Quad>::Verdict::Finite && qh.count == 3,
          "hexagon finite(3) at eps = R");

    auto Tri = make_polygon<Rat>({{Rat(0), Rat(0)}, {Rat(4), Rat(0)}, {Rat(0), Rat(3)}});
    check(!finite_at_circumradius(Tri).verdict, "triangle not finite at eps = R");

    auto d = disc_quantified(Rat(1), Rat(1), Mode::Closed);
    check(d.finite && d.count == 3, "disc finite(3) at eps = rho");

    auto sl = sample_quantified_lower(Rect, EpsSpec::radius_multiple(Rat(1)), Mode::Closed, cfg);
    check(!sl.infinite && sl.lower <= 4, "sampled lower bound consistent");

    json rep = base_report("selftest");
    rep["passed"] = ok;
    emit(rep, std::string("selftest: ") + (ok ? "passed" : "FAILED"));
    return ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact illumination and covering numbers for convex bodies"};
    app.require_subcommand(1);
    std::uint64_t seed = SampleConfig{}.seed;
    app.add_option("--seed", seed, "seed for sampling oracles");

    std::string shape_path, eps_text = "R", mode_text = "closed", out_path, cert_path;

    auto* c_ball = app.add_subcommand("circumball", "smallest enclosing circle");
    c_ball->add_option("shape", shape_path, "shape JSON file")->required();

    auto* c_num = app.add_subcommand("numbers", "classical illumination and covering numbers");
    c_num->add_option("shape", shape_path, "shape JSON file")->required();

    auto* c_q = app.add_subcommand("quantified", "quantified illumination count");
    c_q->add_option("shape", shape_path, "shape JSON file")->required();
    c_q->add_option("--eps", eps_text, "step length: 'p/q', 'R', or 'p/qR'")->required();
    c_q->add_option("--mode", mode_text, "closed | open");
    c_q->add_option("--cert", cert_path, "write certificate JSON here");

    auto* c_fin = app.add_subcommand("finiteness", "finiteness at the circumradius");
    c_fin->add_option("shape", shape_path, "shape JSON file")->required();

    auto* c_ver = app.add_subcommand("verify", "re-verify a certificate");
    c_ver->add_option("certificate", cert_path, "certificate JSON file")->required();

    auto* c_svg = app.add_subcommand("svg", "draw body, circumcircle, translates");
    c_svg->add_option("shape", shape_path, "shape JSON file")->required();
    c_svg->add_option("--out", out_path, "output SVG path")->required();
    c_svg->add_option("--cert", cert_path, "certificate with translations to draw");

    auto* c_self = app.add_subcommand("selftest", "run built-in checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_ball->parsed()) return cmd_circumball(shape_path);
        if (c_num->parsed()) return cmd_numbers(shape_path);
        if (c_q->parsed()) return cmd_quantified(shape_path, eps_text, mode_text, cert_path);
        if (c_fin->parsed()) return cmd_finiteness(shape_path);
        if (c_ver->parsed()) return cmd_verify(cert_path);
        if (c_svg->parsed()) return cmd_svg(shape_path, out_path, cert_path);
        if (c_self->parsed()) return cmd_selftest(seed);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const invalid_input& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
