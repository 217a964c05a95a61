/*
   Copyright 2026 The slicereg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slicereg/json_io.hpp"
#include "slicereg/slicereg.hpp"

namespace {

using nlohmann::json;
using namespace slicereg;

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;
    bool has(const std::string& name) const { return flags.count(name) > 0; }
};

[[noreturn]] void usage_error(const std::string& msg) {
    throw error(errc::schema_error, msg);
}

std::vector<double> parse_reals(const std::string& text, std::size_t count,
                                const std::string& what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(piece, &used));
            if (used != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            usage_error("could not parse " + what + ": '" + piece + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() != count)
        usage_error(what + " needs " + std::to_string(count) +
                    " comma-separated reals");
    return out;
}

Quaternion parse_quaternion(const std::string& s) {
    auto v = parse_reals(s, 4, "quaternion");
    return {v[0], v[1], v[2], v[3]};
}

ImaginaryUnit parse_axis(const std::string& s) {
    auto v = parse_reals(s, 3, "axis");
    Quaternion q{0, v[0], v[1], v[2]};
    double n = q.norm();
    if (n == 0.0) usage_error("axis must be nonzero");
    return ImaginaryUnit((1.0 / n) * q);
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        usage_error("could not parse " + what + ": '" + s + "'");
    }
}

json axis_json(const ImaginaryUnit& u) {
    return json::array({u.axis().x, u.axis().y, u.axis().z});
}

json classify_json(const SliceClass& c) {
    json out;
    switch (c.kind) {
        case SliceClass::Kind::AllSlices: out["verdict"] = "all-slices"; break;
        case SliceClass::Kind::OneSlice:
            out["verdict"] = "one-slice";
            out["axis"] = axis_json(*c.axis);
            break;
        case SliceClass::Kind::NoSlice: out["verdict"] = "no-slice"; break;
    }
    return out;
}

json frame_json(const Frame& f) {
    return {{"i0", axis_json(f.I0)},
            {"j0", axis_json(f.J0)},
            {"k0", axis_json(f.K0)},
            {"a", f.a},
            {"b", f.b}};
}

const std::string kUsage =
    "usage: slicereg [--tol T] COMMAND ARGS...\n"
    "commands:\n"
    "  eval EXPR [--at w,x,y,z]      evaluate an expression (or at a point)\n"
    "  classify EXPR                 slice-preservation verdict\n"
    "  conj EXPR                     conjugate f^c\n"
    "  normal EXPR                   symmetrized f^s (real coefficients)\n"
    "  zeros EXPR                    zero structure with multiplicities\n"
    "  factor EXPR --sphere a,b      factorization at one sphere\n"
    "  weierstrass EXPR              q^m * R * S * h splitting\n"
    "  symroot MUEXPR --axis x,y,z   h with h^s = mu in the given slice\n"
    "  sum-slice F H                 preserved slice of f + h\n"
    "  prod-slice F H                preserved slice of f * h with witness\n"
    "  conj-by H F                   h * f * h^c\n"
    "  solve-h F --m0 x,y,z G        solve h * f * h^c = g for h\n"
    "  solve-f H --i0 x,y,z G        solve h * f * h^c = g for f\n"
    "  twist F H                     joint structure when f*h and h*f are one-slice\n"
    "  power EXPR D [--check-slice]  f^{*D} (or its slice verdict)\n"
    "  sigma D                       nonzero real roots of the degree-D form\n"
    "  qd D                          coefficients of the degree-D form\n";

json run(const std::string& cmd, const Args& a) {
    auto need = [&](std::size_t n) {
        if (a.positional.size() != n)
            usage_error("'" + cmd + "' takes " + std::to_string(n) +
                        " positional argument(s)");
    };
    auto flag = [&](const std::string& name) -> const std::string& {
        auto it = a.flags.find(name);
        if (it == a.flags.end()) usage_error("'" + cmd + "' requires --" + name);
        return it->second;
    };

    if (cmd == "eval") {
        need(1);
        SlicePoly f = eval_expr(a.positional[0]);
        if (a.has("at")) {
            Quaternion p = parse_quaternion(flag("at"));
            Quaternion v = evaluate(f, p);
            return json::array({v.w, v.x, v.y, v.z});
        }
        return to_json(f);
    }
    if (cmd == "classify") {
        need(1);
        return classify_json(classify(eval_expr(a.positional[0])));
    }
    if (cmd == "conj") {
        need(1);
        return to_json(star_conj(eval_expr(a.positional[0])));
    }
    if (cmd == "normal") {
        need(1);
        return to_json(symmetrized(eval_expr(a.positional[0])));
    }
    if (cmd == "zeros") {
        need(1);
        ZeroStructure zs = zero_structure(eval_expr(a.positional[0]));
        json spheres = json::array();
        for (const auto& s : zs.spheres) {
            json e{{"alpha", s.alpha},
                   {"beta", s.beta},
                   {"spherical_multiplicity", s.spherical_multiplicity}};
            if (s.isolated)
                e["isolated"] = {{"point", to_json(s.isolated->point)},
                                 {"multiplicity", s.isolated->multiplicity}};
            else
                e["isolated"] = nullptr;
            spheres.push_back(std::move(e));
        }
        json reals = json::array();
        for (const auto& r : zs.real_zeros)
            reals.push_back({{"x", r.x}, {"multiplicity", r.multiplicity}});
        return {{"origin_multiplicity", zs.origin_multiplicity},
                {"real_zeros", std::move(reals)},
                {"spheres", std::move(spheres)}};
    }
    if (cmd == "factor") {
        need(1);
        auto sphere = parse_reals(flag("sphere"), 2, "sphere");
        SphereFactorization fac =
            factor_at_sphere(eval_expr(a.positional[0]), sphere[0], sphere[1]);
        json points = json::array();
        for (const auto& p : fac.points) points.push_back(to_json(p));
        return {{"spherical_power", fac.spherical_power},
                {"points", std::move(points)},
                {"cofactor", to_json(fac.cofactor)}};
    }
    if (cmd == "weierstrass") {
        need(1);
        WeierstrassParts w = weierstrass_factor(eval_expr(a.positional[0]));
        return {{"origin_multiplicity", w.origin_multiplicity},
                {"real_factor", to_json(w.real_factor)},
                {"spherical_factor", to_json(w.spherical_factor)},
                {"unit", to_json(w.unit)}};
    }
    if (cmd == "symroot") {
        need(1);
        SlicePoly mu = eval_expr(a.positional[0]);
        if (!classify(mu).all_slices())
            throw error(errc::precondition_violated,
                        "symroot input must have real components only");
        auto h = symmetrized_root(mu[0], parse_axis(flag("axis")));
        return h ? to_json(*h) : json(nullptr);
    }
    if (cmd == "sum-slice") {
        need(2);
        auto axis = sum_preserved_slice(eval_expr(a.positional[0]),
                                        eval_expr(a.positional[1]));
        return axis ? axis_json(*axis) : json(nullptr);
    }
    if (cmd == "prod-slice") {
        need(2);
        auto w = product_preserved_slice(eval_expr(a.positional[0]),
                                         eval_expr(a.positional[1]));
        if (!w) return json(nullptr);
        return {{"axis", axis_json(w->axis)}, {"a", w->a}, {"b", w->b},
                {"eps", w->eps}};
    }
    if (cmd == "conj-by") {
        need(2);
        return to_json(conjugate_by(eval_expr(a.positional[0]),
                                    eval_expr(a.positional[1])));
    }
    if (cmd == "solve-h") {
        need(2);
        auto h = solve_conjugation_h(eval_expr(a.positional[0]),
                                     parse_axis(flag("m0")),
                                     eval_expr(a.positional[1]));
        return h ? to_json(*h) : json(nullptr);
    }
    if (cmd == "solve-f") {
        need(2);
        auto f = solve_conjugation_f(eval_expr(a.positional[0]),
                                     parse_axis(flag("i0")),
                                     eval_expr(a.positional[1]));
        return f ? to_json(*f) : json(nullptr);
    }
    if (cmd == "twist") {
        need(2);
        TwistedPair t = twisted_pair_structure(eval_expr(a.positional[0]),
                                               eval_expr(a.positional[1]));
        const char* kind = nullptr;
        switch (t.kind) {
            case TwistedPair::Case::SameSlice: kind = "same-slice"; break;
            case TwistedPair::Case::SameSliceOrthogonal:
                kind = "same-slice-orthogonal";
                break;
            case TwistedPair::Case::DifferentSlicePlus:
                kind = "different-slice-plus";
                break;
            case TwistedPair::Case::DifferentSliceMinus:
                kind = "different-slice-minus";
                break;
        }
        json out{{"case", kind},
                 {"f_tilde", to_json(t.f_tilde)},
                 {"h_tilde", to_json(t.h_tilde)},
                 {"frame", frame_json(t.frame)}};
        out["alpha"] = t.alpha ? to_json(*t.alpha) : json(nullptr);
        return out;
    }
    if (cmd == "power") {
        need(2);
        SlicePoly f = eval_expr(a.positional[0]);
        int d = parse_int(a.positional[1], "power");
        if (d < 0) usage_error("power must be nonnegative");
        if (a.has("check-slice")) {
            PowerSliceVerdict v = power_slice_preserving(f, d);
            json out;
            out["verdict"] = v.slice_preserving() ? "slice-preserving" : "no";
            out["xi"] = v.xi ? json(*v.xi) : json(nullptr);
            return out;
        }
        return to_json(star_power(f, d));
    }
    if (cmd == "sigma") {
        need(1);
        SigmaSet s = sigma_set(parse_int(a.positional[0], "degree"));
        return {{"d", s.d}, {"values", s.values}};
    }
    if (cmd == "qd") {
        need(1);
        BinaryForm q = binary_form(parse_int(a.positional[0], "degree"));
        json terms = json::array();
        for (std::size_t n = 0; n < q.coeffs.size(); ++n)
            terms.push_back({{"coefficient", q.coeffs[n]},
                             {"x_exponent", q.x_exponent(static_cast<int>(n))},
                             {"y_exponent", q.y_exponent(static_cast<int>(n))}});
        return {{"d", q.d}, {"terms", std::move(terms)}};
    }
    usage_error("unknown command '" + cmd + "'\n" + kUsage);
}

} // namespace

int main(int argc, char** argv) {
    try {
        std::vector<std::string> raw(argv + 1, argv + argc);
        if (raw.empty()) usage_error("missing command\n" + kUsage);

        std::optional<double> tol;
        if (const char* env = std::getenv("SLICEREG_TOL")) {
            try {
                tol = std::stod(env);
            } catch (const std::exception&) {
                usage_error("SLICEREG_TOL is not a number");
            }
        }

        Args args;
        std::string cmd;
        const std::vector<std::string> valued = {"at",  "sphere", "axis",
                                                 "m0",  "i0",     "tol"};
        for (std::size_t i = 0; i < raw.size(); ++i) {
            const std::string& s = raw[i];
            if (s.rfind("--", 0) == 0) {
                std::string name = s.substr(2);
                std::string value;
                auto eq = name.find('=');
                if (eq != std::string::npos) {
                    value = name.substr(eq + 1);
                    name = name.substr(0, eq);
                } else if (std::find(valued.begin(), valued.end(), name) !=
                           valued.end()) {
                    if (i + 1 >= raw.size())
                        usage_error("--" + name + " needs a value");
                    value = raw[++i];
                }
                args.flags[name] = value;
            } else if (cmd.empty()) {
                cmd = s;
            } else {
                args.positional.push_back(s);
            }
        }
        if (cmd.empty()) usage_error("missing command\n" + kUsage);
        if (args.has("tol")) {
            try {
                tol = std::stod(args.flags.at("tol"));
            } catch (const std::exception&) {
                usage_error("--tol is not a number");
            }
        }
        if (tol) {
            if (!(*tol > 0)) usage_error("tolerance must be positive");
            tolerance().div = *tol;
        }

        json result = run(cmd, args);
        json envelope{{"result", std::move(result)}};
        std::cout << envelope.dump() << "\n";
        return 0;
    } catch (const error& e) {
        json err{{"error",
                  {{"kind", errc_name(e.code())}, {"message", e.what()}}}};
        if (e.offset() != error::npos) err["error"]["offset"] = e.offset();
        std::cerr << err.dump() << "\n";
        return (e.code() == errc::syntax_error || e.code() == errc::schema_error)
                   ? 2
                   : 1;
    } catch (const std::exception& e) {
        json err{{"error", {{"kind", "internal"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
