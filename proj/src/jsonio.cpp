#include "nashtoric/jsonio.hpp"

#include <cmath>
#include <sstream>

namespace nashtoric {

Json to_json(const LatticePoint& p) { return Json::array({p.x, p.y}); }

Json to_json(const MultiIndex& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) a.push_back(m[i]);
    return a;
}

Json to_json(const LambdaSet& lam) {
    Json j;
    j["t"] = lam.t;
    j["n"] = lam.n;
    j["count"] = lam.size();
    j["elements"] = Json::array();
    for (const MultiIndex& m : lam.elements) j["elements"].push_back(to_json(m));
    return j;
}

Json to_json(const EtaSequence& eta) {
    Json j;
    j["z"] = eta.z;
    j["d"] = eta.d;
    j["label"] = format_eta(eta);
    return j;
}

Json to_json(const StaircaseData& sd) {
    Json j;
    j["eta"] = to_json(sd.eta);
    j["base_vectors"] = Json::array();
    for (const LatticePoint& v : sd.base_vectors)
        j["base_vectors"].push_back(to_json(v));
    j["segments"] = Json::array();
    for (const auto& seg : sd.segments) {
        Json s = Json::array();
        for (const LatticePoint& p : seg) s.push_back(to_json(p));
        j["segments"].push_back(std::move(s));
    }
    return j;
}

Json to_json(const TranslatedStaircase& ts) {
    Json j;
    j["eta"] = to_json(ts.eta);
    j["shifts"] = ts.shifts;
    j["segments"] = Json::array();
    for (const auto& seg : ts.segments) {
        Json s = Json::array();
        for (const LatticePoint& p : seg) s.push_back(to_json(p));
        j["segments"].push_back(std::move(s));
    }
    j["points"] = Json::array();
    for (const LatticePoint& p : ts.points) j["points"].push_back(to_json(p));
    return j;
}

Json to_json(const EtaKTrace& trace) {
    Json j;
    j["n"] = trace.n;
    j["k"] = trace.k;
    j["z"] = trace.eta.z;
    j["d"] = trace.eta.d;
    j["t"] = trace.t;
    j["s"] = trace.s;
    j["eta"] = to_json(trace.eta);
    return j;
}

Json to_json(const EtaKReport& report) {
    Json j;
    j["n"] = report.n;
    j["k"] = report.k;
    j["trace"] = to_json(report.trace);
    j["eta_k"] = to_json(report.eta_k);
    j["twin"] = to_json(report.twin);
    j["twin_constructive"] = report.twin_constructive;
    j["m_k"] = to_json(report.m_k);
    j["m_twin"] = to_json(report.m_twin);
    j["f_value"] = report.f_value;
    j["checks"] = {{"twin_f_equal", report.twin_f_equal},
                   {"m_distinct", report.m_distinct},
                   {"eta_k_in_S", report.eta_k_in_S},
                   {"twin_in_S", report.twin_in_S},
                   {"family_min", report.family_min}};
    j["pass"] = report.all_checks_pass();
    return j;
}

Json to_json(const PointCloud& cloud) {
    Json j;
    j["n"] = cloud.n;
    j["points"] = Json::array();
    for (const PointCloud::Entry& e : cloud.points) {
        Json pe;
        pe["point"] = to_json(e.p);
        pe["witness_count"] = e.witness_count;
        if (!e.witnesses.empty()) pe["witnesses"] = e.witnesses;
        j["points"].push_back(std::move(pe));
    }
    return j;
}

Json to_json(const Fan2D& fan) {
    Json j;
    j["n"] = fan.n;
    j["rays"] = Json::array();
    for (const LatticePoint& r : fan.rays) j["rays"].push_back(to_json(r));
    j["cones"] = Json::array();
    for (const Fan2D::Cone& c : fan.cones) {
        Json ce;
        ce["rays"] = {to_json(fan.rays[c.ray_lo]), to_json(fan.rays[c.ray_hi])};
        if (c.tag) ce["tag"] = to_json(*c.tag);
        if (!c.witnesses.empty()) ce["witnesses"] = c.witnesses;
        j["cones"].push_back(std::move(ce));
    }
    return j;
}

Json to_json(const OracleResult& result) {
    Json j;
    j["n"] = result.n;
    j["candidates"] = result.candidates;
    j["s_count"] = result.s_count;
    j["points"] = to_json(result.points)["points"];
    return j;
}

Json to_json(const CrossCheckReport& report) {
    Json j;
    j["n"] = report.n;
    j["per_k"] = Json::array();
    for (const CrossCheckReport::PerK& e : report.per_k) {
        Json ke;
        ke["k"] = e.k;
        ke["family_ord"] = e.family_ord;
        ke["oracle_ord"] = e.oracle_ord;
        ke["ord_match"] = e.ord_match;
        ke["minimizers_contain_family"] = e.minimizers_contain_family;
        j["per_k"].push_back(std::move(ke));
    }
    j["fan_refines_resolution"] = report.fan_refines_resolution;
    j["family_subset_of_oracle"] = report.family_subset_of_oracle;
    j["pass"] = report.pass();
    return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

namespace {

// Map a ray direction to a point on a circle of radius `scale` around the
// origin of the drawing.
std::pair<double, double> ray_tip(long long x, long long y, double scale,
                                  double cx, double cy) {
    const double len = std::sqrt(static_cast<double>(x) * x +
                                 static_cast<double>(y) * y);
    // SVG y grows downward.
    return {cx + scale * x / len, cy - scale * y / len};
}

}  // namespace

std::string render_fan_svg(const Json& fan_json) {
    const double w = 420, h = 420, cx = 60, cy = 210, scale = 170;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
       << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "  <rect width=\"" << w << "\" height=\"" << h
       << "\" fill=\"white\"/>\n";

    const auto& rays = fan_json.at("rays");
    // Shade each cone as a triangle between its two rays.
    if (fan_json.contains("cones")) {
        int shade = 0;
        for (const auto& cone : fan_json.at("cones")) {
            const auto& r = cone.at("rays");
            auto [ax, ay] = ray_tip(r[0][0].get<long long>(),
                                    r[0][1].get<long long>(), scale, cx, cy);
            auto [bx, by] = ray_tip(r[1][0].get<long long>(),
                                    r[1][1].get<long long>(), scale, cx, cy);
            os << "  <path d=\"M " << cx << ' ' << cy << " L " << ax << ' '
               << ay << " L " << bx << ' ' << by << " Z\" fill=\""
               << (shade++ % 2 ? "#dde8f5" : "#eef3fa")
               << "\" stroke=\"none\"/>\n";
            if (cone.contains("tag")) {
                const double tx = (cx + ax + bx) / 3, ty = (cy + ay + by) / 3;
                os << "  <text x=\"" << tx << "\" y=\"" << ty
                   << "\" font-size=\"11\" fill=\"#333\">("
                   << cone["tag"][0].get<long long>() << ","
                   << cone["tag"][1].get<long long>() << ")</text>\n";
            }
        }
    }
    for (const auto& r : rays) {
        const long long x = r[0].get<long long>(), y = r[1].get<long long>();
        auto [tx, ty] = ray_tip(x, y, scale, cx, cy);
        os << "  <line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << tx
           << "\" y2=\"" << ty << "\" stroke=\"#1a4d8f\" stroke-width=\"1.5\"/>\n";
        os << "  <text x=\"" << tx + 4 << "\" y=\"" << ty
           << "\" font-size=\"11\" fill=\"#1a4d8f\">(" << x << "," << y
           << ")</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace nashtoric
