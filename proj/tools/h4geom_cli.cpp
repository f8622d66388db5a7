// Command line front end: interval / distance / speed / boost /
// add-velocities / surface over the quartic and Minkowski geometries.
// Exit codes: 0 ok, 2 domain or configuration error, 3 I/O error.

#include <clocale>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "h4/errors.hpp"
#include "h4/format.hpp"
#include "h4/kinematics.hpp"
#include "h4/metric.hpp"
#include "h4/minkowski.hpp"
#include "h4/simultaneity.hpp"
#include "h4/surface.hpp"
#include "h4/transforms.hpp"

namespace {

struct GlobalOpts {
    std::string format; // "json" or "csv"; empty = per-command default
    std::string out_path;
    double tolerance = 1e-12;

    std::string format_or(const char* dflt) const { return format.empty() ? dflt : format; }
};

void write_lines(const GlobalOpts& g, const std::vector<std::string>& lines) {
    if (g.out_path.empty()) {
        for (const auto& l : lines) std::cout << l << "\n";
        return;
    }
    std::ofstream f(g.out_path, std::ios::binary);
    if (!f) throw h4::IoError("cannot open output file: " + g.out_path);
    for (const auto& l : lines) f << l << "\n";
    if (!f) throw h4::IoError("write failed: " + g.out_path);
}

std::vector<double> as_vec(const h4::Event4& e) { return {e.x0, e.x1, e.x2, e.x3}; }

const char* mink_region_name(double s2, double x0, double scale, double tol_scale) {
    if (std::fabs(s2) <= tol_scale * std::max(scale, 1.0)) return "on_boundary";
    return (s2 > 0.0 && x0 > 0.0) ? "inside_future" : "outside";
}

// ---- interval ----------------------------------------------------------

struct IntervalArgs {
    std::string geometry = "h4";
    std::string basis = "orthonormal";
    std::vector<double> coords;
};

void run_interval(const GlobalOpts& g, const IntervalArgs& a) {
    const bool iso = a.basis == "isotropic";
    double s4 = std::numeric_limits<double>::quiet_NaN();
    double s2 = std::numeric_limits<double>::quiet_NaN();
    double s = std::numeric_limits<double>::quiet_NaN();
    std::string cone;

    if (a.geometry == "h4") {
        if (iso) {
            h4::IsotropicEvent4 xi{a.coords[0], a.coords[1], a.coords[2], a.coords[3]};
            s = h4::interval_h4_isotropic(xi);
            s4 = xi.xi1 * xi.xi2 * xi.xi3 * xi.xi4;
            cone = h4::cone_region_name(h4::cone_classify(xi, g.tolerance));
        } else {
            h4::Event4 e{a.coords[0], a.coords[1], a.coords[2], a.coords[3]};
            const h4::Interval iv = h4::interval_h4(e);
            s4 = iv.fourth_power;
            s = iv.value;
            cone = h4::cone_region_name(h4::cone_classify(h4::to_isotropic(e), g.tolerance));
        }
    } else {
        if (iso) {
            h4::IsotropicEvent4 xi{a.coords[0], a.coords[1], a.coords[2], a.coords[3]};
            s2 = h4::interval2_minkowski_isotropiclike(xi);
            s = s2 >= 0.0 ? std::sqrt(s2) : std::numeric_limits<double>::quiet_NaN();
            cone = mink_region_name(s2, a.coords[0] + a.coords[1] + a.coords[2] + a.coords[3],
                                    std::fabs(s2), g.tolerance);
        } else {
            h4::Event4 e{a.coords[0], a.coords[1], a.coords[2], a.coords[3]};
            s2 = h4::interval2_minkowski(e);
            s4 = h4::interval4_minkowski(e);
            s = s2 >= 0.0 ? std::sqrt(s2) : std::numeric_limits<double>::quiet_NaN();
            const double scale = e.x0 * e.x0 + e.x1 * e.x1 + e.x2 * e.x2 + e.x3 * e.x3;
            cone = mink_region_name(s2, e.x0, scale, g.tolerance);
        }
    }

    std::vector<std::string> lines;
    if (g.format_or("json") == "json") {
        h4::JsonObject o;
        o.add("command", "interval").add("geometry", a.geometry).add("basis", a.basis);
        o.add_array("coords", a.coords);
        if (!std::isnan(s4)) o.add("S4", s4);
        if (!std::isnan(s2)) o.add("S2", s2);
        o.add("S", s).add("cone", cone).add("status", "ok");
        lines.push_back(o.str());
    } else {
        lines.push_back("geometry,basis,c0,c1,c2,c3,S4,S2,S,cone,status");
        lines.push_back(h4::csv_join({a.geometry, a.basis, h4::fmt_g17(a.coords[0]),
                                      h4::fmt_g17(a.coords[1]), h4::fmt_g17(a.coords[2]),
                                      h4::fmt_g17(a.coords[3]), h4::fmt_g17(s4), h4::fmt_g17(s2),
                                      h4::fmt_g17(s), cone, "ok"}));
    }
    write_lines(g, lines);
}

// ---- distance ----------------------------------------------------------

struct DistanceArgs {
    std::string geometry = "h4";
    double t_half = 1.0;
    bool asymmetry = false;
    std::vector<double> offset;
};

void run_distance(const GlobalOpts& g, const DistanceArgs& a) {
    const h4::ObserverScale scale(a.t_half);
    const h4::SpatialOffset d{a.offset[0], a.offset[1], a.offset[2]};
    std::vector<std::string> lines;

    if (a.asymmetry) {
        double lp, lm;
        if (a.geometry == "h4") {
            const auto pair = h4::distance_asymmetry(scale, d);
            lp = pair.first;
            lm = pair.second;
        } else {
            lp = h4::mink_distance_from_offset(a.t_half, d.x1, d.x2, d.x3);
            lm = h4::mink_distance_from_offset(a.t_half, -d.x1, -d.x2, -d.x3);
        }
        if (g.format_or("json") == "json") {
            h4::JsonObject o;
            o.add("command", "distance").add("geometry", a.geometry).add("T", a.t_half);
            o.add_array("offset", a.offset);
            o.add("l_plus", lp).add("l_minus", lm).add("separation", std::fabs(lp - lm));
            o.add("status", "ok");
            lines.push_back(o.str());
        } else {
            lines.push_back("geometry,T,x1,x2,x3,l_plus,l_minus,separation,status");
            lines.push_back(h4::csv_join(
                {a.geometry, h4::fmt_g17(a.t_half), h4::fmt_g17(d.x1), h4::fmt_g17(d.x2),
                 h4::fmt_g17(d.x3), h4::fmt_g17(lp), h4::fmt_g17(lm),
                 h4::fmt_g17(std::fabs(lp - lm)), "ok"}));
        }
        write_lines(g, lines);
        return;
    }

    double x0 = std::numeric_limits<double>::quiet_NaN();
    double s4 = std::numeric_limits<double>::quiet_NaN();
    double l;
    if (a.geometry == "h4") {
        const h4::SurfacePoint p = h4::solve_offset(scale, d, g.tolerance);
        if (p.status == h4::SampleStatus::OutsideDomain)
            throw h4::OutsideDomainError("distance: offset not inside the open ball r < T");
        if (p.status == h4::SampleStatus::OutsideCausal)
            throw h4::OutsideCausalRegionError("distance: surface interval outside [0, T^4]");
        x0 = p.x0;
        s4 = p.s4;
        l = p.l;
    } else {
        l = h4::mink_distance_from_offset(a.t_half, d.x1, d.x2, d.x3);
        x0 = 0.0;
        const double s2 = a.t_half * a.t_half - (d.x1 * d.x1 + d.x2 * d.x2 + d.x3 * d.x3);
        s4 = s2 * s2;
    }

    if (g.format_or("json") == "json") {
        h4::JsonObject o;
        o.add("command", "distance").add("geometry", a.geometry).add("T", a.t_half);
        o.add_array("offset", a.offset);
        o.add("x0", x0).add("S4", s4).add("l", l).add("status", "ok");
        lines.push_back(o.str());
    } else {
        lines.push_back("geometry,T,x1,x2,x3,x0,S4,l,status");
        lines.push_back(h4::csv_join({a.geometry, h4::fmt_g17(a.t_half), h4::fmt_g17(d.x1),
                                      h4::fmt_g17(d.x2), h4::fmt_g17(d.x3), h4::fmt_g17(x0),
                                      h4::fmt_g17(s4), h4::fmt_g17(l), "ok"}));
    }
    write_lines(g, lines);
}

// ---- speed -------------------------------------------------------------

void run_speed(const GlobalOpts& g, const std::vector<double>& vv) {
    const h4::Velocity3 v{vv[0], vv[1], vv[2]};
    const h4::WForm wf = h4::w_form(v);
    const h4::VelocityClass cls = h4::classify_velocity(v);
    double mod = std::numeric_limits<double>::quiet_NaN();
    if (cls != h4::VelocityClass::Superluminal) mod = h4::velocity_modulus_h4(v);
    const double mod_euclid = h4::mink_velocity_modulus(v);
    const char* status =
        cls == h4::VelocityClass::Superluminal ? "superluminal" : "ok";

    std::vector<std::string> lines;
    if (g.format_or("json") == "json") {
        h4::JsonObject o;
        o.add("command", "speed");
        o.add_array("v", vv);
        o.add("class", h4::velocity_class_name(cls));
        o.add_array("factors", {wf.factors[0], wf.factors[1], wf.factors[2], wf.factors[3]});
        o.add("W", wf.w).add("modulus_h4", mod).add("modulus_euclid", mod_euclid);
        o.add("status", status);
        lines.push_back(o.str());
    } else {
        lines.push_back("v1,v2,v3,class,W,modulus_h4,modulus_euclid,status");
        lines.push_back(h4::csv_join({h4::fmt_g17(vv[0]), h4::fmt_g17(vv[1]), h4::fmt_g17(vv[2]),
                                      h4::velocity_class_name(cls), h4::fmt_g17(wf.w),
                                      h4::fmt_g17(mod), h4::fmt_g17(mod_euclid), status}));
    }
    write_lines(g, lines);
}

// ---- boost -------------------------------------------------------------

struct BoostArgs {
    std::vector<double> vel;
    std::vector<double> event; // single event mode
    std::string events_path;   // stream mode
    std::string direction = "forward";
};

std::string boost_record(const std::string& fmt, const BoostArgs& a, const h4::Event4& e,
                         const h4::Event4& out, const std::string& status) {
    const double before = h4::interval4_h4_orthonormal(e);
    const double after = h4::interval4_h4_orthonormal(out);
    if (fmt == "json") {
        h4::JsonObject o;
        o.add("command", "boost").add("direction", a.direction);
        o.add_array("V", a.vel);
        o.add_array("event", as_vec(e));
        o.add_array("image", as_vec(out));
        o.add("S4_before", before).add("S4_after", after).add("status", status);
        return o.str();
    }
    return h4::csv_join({h4::fmt_g17(e.x0), h4::fmt_g17(e.x1), h4::fmt_g17(e.x2),
                         h4::fmt_g17(e.x3), h4::fmt_g17(out.x0), h4::fmt_g17(out.x1),
                         h4::fmt_g17(out.x2), h4::fmt_g17(out.x3), h4::fmt_g17(before),
                         h4::fmt_g17(after), status});
}

std::string boost_parse_error(const std::string& fmt, const BoostArgs& a, long long line_no) {
    if (fmt == "json") {
        h4::JsonObject o;
        o.add("command", "boost").add("direction", a.direction);
        o.add_array("V", a.vel);
        o.add("line", line_no).add("status", "parse_error");
        return o.str();
    }
    std::vector<std::string> cells(10, "nan");
    cells.push_back("parse_error");
    return h4::csv_join(cells);
}

void run_boost(const GlobalOpts& g, const BoostArgs& a) {
    if (a.direction != "forward" && a.direction != "inverse")
        throw h4::ConfigError("boost: --direction must be forward or inverse");
    const h4::FrameVelocity V({a.vel[0], a.vel[1], a.vel[2]});
    h4::GroupElement elem = h4::group_from_velocity(V);
    if (a.direction == "inverse") elem = h4::inverse(elem);

    const std::string fmt = g.format_or("json");
    std::vector<std::string> lines;
    if (fmt == "csv")
        lines.push_back("x0,x1,x2,x3,y0,y1,y2,y3,S4_before,S4_after,status");

    if (!a.events_path.empty()) {
        std::ifstream f(a.events_path);
        if (!f) throw h4::IoError("cannot open events file: " + a.events_path);
        std::string line;
        long long line_no = 0;
        while (std::getline(f, line)) {
            ++line_no;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            std::istringstream ss(line);
            h4::Event4 e;
            double extra;
            if (!(ss >> e.x0 >> e.x1 >> e.x2 >> e.x3) || (ss >> extra)) {
                lines.push_back(boost_parse_error(fmt, a, line_no));
                continue;
            }
            lines.push_back(boost_record(fmt, a, e, h4::apply_group(elem, e), "ok"));
        }
    } else {
        if (a.event.size() != 4)
            throw h4::ConfigError("boost: give --event x0 x1 x2 x3 or --events PATH");
        const h4::Event4 e{a.event[0], a.event[1], a.event[2], a.event[3]};
        lines.push_back(boost_record(fmt, a, e, h4::apply_group(elem, e), "ok"));
    }
    write_lines(g, lines);
}

// ---- add-velocities ----------------------------------------------------

void run_add(const GlobalOpts& g, const std::vector<double>& vv, const std::vector<double>& VV) {
    const h4::Velocity3 v{vv[0], vv[1], vv[2]};
    const h4::FrameVelocity V({VV[0], VV[1], VV[2]});
    const h4::Velocity3 sum = h4::add_velocities(v, V);
    const double mod_direct = h4::velocity_modulus_h4(sum);
    const double mod_closed = h4::modulus_after_boost(v, V);
    const double dilation = h4::time_dilation_factor(v, V);
    const bool collinear = vv[1] == 0.0 && vv[2] == 0.0 && VV[1] == 0.0 && VV[2] == 0.0;
    const double sr = collinear ? (vv[0] + VV[0]) / (1.0 + vv[0] * VV[0])
                                : std::numeric_limits<double>::quiet_NaN();

    std::vector<std::string> lines;
    if (g.format_or("json") == "json") {
        h4::JsonObject o;
        o.add("command", "add-velocities");
        o.add_array("v", vv);
        o.add_array("V", VV);
        o.add_array("sum", {sum.v1, sum.v2, sum.v3});
        o.add("modulus", mod_direct).add("modulus_closed_form", mod_closed);
        o.add("time_dilation", dilation);
        if (collinear) o.add("sr_collinear", sr);
        o.add("status", "ok");
        lines.push_back(o.str());
    } else {
        lines.push_back(
            "v1,v2,v3,V1,V2,V3,s1,s2,s3,modulus,modulus_closed_form,time_dilation,sr_collinear,status");
        lines.push_back(h4::csv_join(
            {h4::fmt_g17(vv[0]), h4::fmt_g17(vv[1]), h4::fmt_g17(vv[2]), h4::fmt_g17(VV[0]),
             h4::fmt_g17(VV[1]), h4::fmt_g17(VV[2]), h4::fmt_g17(sum.v1), h4::fmt_g17(sum.v2),
             h4::fmt_g17(sum.v3), h4::fmt_g17(mod_direct), h4::fmt_g17(mod_closed),
             h4::fmt_g17(dilation), h4::fmt_g17(sr), "ok"}));
    }
    write_lines(g, lines);
}

// ---- surface -----------------------------------------------------------

struct SurfaceArgs {
    double t_half = 1.0;
    std::string geometry = "h4";
    std::vector<double> ax1{-0.5, 0.5, 21};
    std::vector<double> ax2{-0.5, 0.5, 21};
    std::vector<double> ax3{0.0, 0.0, 1};
    bool serial = false;
};

h4::GridAxis parse_axis(const std::vector<double>& spec, const char* name) {
    const double count = spec[2];
    if (!(count >= 1.0) || count != std::floor(count) || count > 2147483647.0)
        throw h4::ConfigError(std::string("surface: ") + name + " count must be a positive integer");
    return {spec[0], spec[1], static_cast<int>(count)};
}

void run_surface(const GlobalOpts& g, const SurfaceArgs& a) {
    h4::GridSpec grid;
    grid.x1 = parse_axis(a.ax1, "--x1");
    grid.x2 = parse_axis(a.ax2, "--x2");
    grid.x3 = parse_axis(a.ax3, "--x3");
    const h4::ObserverScale scale(a.t_half);

    std::vector<h4::SurfaceSample> samples;
    if (a.geometry == "minkowski")
        samples = h4::sample_surface_minkowski(scale, grid);
    else if (a.serial)
        samples = h4::sample_surface_serial(scale, grid, g.tolerance);
    else
        samples = h4::sample_surface(scale, grid, g.tolerance);

    long long ok = 0, dom = 0, causal = 0;
    for (const auto& s : samples) {
        if (s.status == h4::SampleStatus::Ok) ++ok;
        else if (s.status == h4::SampleStatus::OutsideDomain) ++dom;
        else ++causal;
    }

    std::vector<std::string> lines;
    const std::string fmt = g.format_or("csv");
    if (fmt == "csv") {
        lines.push_back("x1,x2,x3,x0,S4,l,status");
        for (const auto& s : samples)
            lines.push_back(h4::csv_join({h4::fmt_g17(s.x1), h4::fmt_g17(s.x2), h4::fmt_g17(s.x3),
                                          h4::fmt_g17(s.x0), h4::fmt_g17(s.s4), h4::fmt_g17(s.l),
                                          h4::sample_status_name(s.status)}));
        lines.push_back("# summary total=" + std::to_string(samples.size()) +
                        " ok=" + std::to_string(ok) + " outside_domain=" + std::to_string(dom) +
                        " outside_causal=" + std::to_string(causal));
    } else {
        for (const auto& s : samples) {
            h4::JsonObject o;
            o.add("x1", s.x1).add("x2", s.x2).add("x3", s.x3);
            o.add("x0", s.x0).add("S4", s.s4).add("l", s.l);
            o.add("status", h4::sample_status_name(s.status));
            lines.push_back(o.str());
        }
        h4::JsonObject o;
        o.add("record", "summary").add("total", static_cast<long long>(samples.size()));
        o.add("ok", ok).add("outside_domain", dom).add("outside_causal", causal);
        lines.push_back(o.str());
    }
    write_lines(g, lines);
}

} // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"Quartic-interval geometry: intervals, simultaneity distances, velocities"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--format", g.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
    app.add_option("--tolerance", g.tolerance, "Boundary classification tolerance")
        ->check(CLI::PositiveNumber);

    IntervalArgs ia;
    auto* ci = app.add_subcommand("interval", "Interval of one event");
    ci->add_option("--geometry", ia.geometry)->check(CLI::IsMember({"h4", "minkowski"}));
    ci->add_option("--basis", ia.basis)->check(CLI::IsMember({"orthonormal", "isotropic"}));
    ci->add_option("coords", ia.coords, "x0 x1 x2 x3 (or xi1..xi4)")->expected(4)->required();

    DistanceArgs da;
    auto* cd = app.add_subcommand("distance", "Distance to a parallel world line");
    cd->add_option("--geometry", da.geometry)->check(CLI::IsMember({"h4", "minkowski"}));
    cd->add_option("--T", da.t_half, "Anchor half-separation")->required();
    cd->add_flag("--asymmetry", da.asymmetry, "Report the pair (l(d), l(-d))");
    cd->add_option("offset", da.offset, "x1 x2 x3")->expected(3)->required();

    std::vector<double> sv;
    auto* cs = app.add_subcommand("speed", "Velocity modulus and cone classification");
    cs->add_option("v", sv, "v1 v2 v3")->expected(3)->required();

    BoostArgs ba;
    auto* cb = app.add_subcommand("boost", "Apply the boost for frame velocity V");
    cb->add_option("--V", ba.vel, "V1 V2 V3")->expected(3)->required();
    cb->add_option("--events", ba.events_path, "Whitespace-separated x0 x1 x2 x3 per line");
    cb->add_option("--direction", ba.direction, "forward or inverse")
        ->check(CLI::IsMember({"forward", "inverse"}));
    cb->add_option("--event", ba.event, "Single event x0 x1 x2 x3")->expected(4);

    std::vector<double> avv;
    auto* ca = app.add_subcommand("add-velocities", "Compose object and frame velocities");
    ca->add_option("values", avv, "v1 v2 v3 V1 V2 V3")->expected(6)->required();

    SurfaceArgs sa;
    auto* cf = app.add_subcommand("surface", "Sample the simultaneity surface over a grid");
    cf->add_option("--T", sa.t_half, "Anchor half-separation")->required();
    cf->add_option("--geometry", sa.geometry)->check(CLI::IsMember({"h4", "minkowski"}));
    cf->add_option("--x1", sa.ax1, "min max count")->expected(3);
    cf->add_option("--x2", sa.ax2, "min max count")->expected(3);
    cf->add_option("--x3", sa.ax3, "min max count")->expected(3);
    cf->add_flag("--serial", sa.serial, "Force the serial sampler");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ci->parsed()) run_interval(g, ia);
        else if (cd->parsed()) run_distance(g, da);
        else if (cs->parsed()) run_speed(g, sv);
        else if (cb->parsed()) run_boost(g, ba);
        else if (ca->parsed())
            run_add(g, {avv[0], avv[1], avv[2]}, {avv[3], avv[4], avv[5]});
        else if (cf->parsed()) run_surface(g, sa);
    } catch (const h4::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const h4::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
