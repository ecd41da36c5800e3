/*
   Copyright 2026 The z2dc Authors

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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "z2dc/catalog.hpp"
#include "z2dc/duality.hpp"
#include "z2dc/errors.hpp"
#include "z2dc/oracle.hpp"
#include "z2dc/verify.hpp"

namespace z2dc::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// Code given either by flags or by a JSON spec file; flags win over file fields.
struct SpecArgs {
    std::optional<int> r;
    std::optional<int> s;
    std::optional<std::string> b;
    std::optional<std::string> ell;
    std::optional<std::string> a;
    std::string file;

    void attach(CLI::App& cmd) {
        cmd.add_option("-r", r, "left block length");
        cmd.add_option("-s", s, "right block length");
        cmd.add_option("-b", b, "left generator b(x)");
        cmd.add_option("-l,--ell", ell, "coupling polynomial ell(x) (default 0)");
        cmd.add_option("-a", a, "right generator a(x)");
        cmd.add_option("--spec", file, "JSON spec file with r, s, b, ell, a");
    }

    GeneratorTriple triple() const {
        SpecArgs merged = *this;
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw ValidationError(ValidationKind::InvalidArgument, "cannot open spec file " + file);
            ordered_json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw ValidationError(ValidationKind::InvalidArgument, "spec file " + file + ": " + e.what());
            }
            auto pick = [&j](const char* key, auto& slot) {
                if (!slot && j.contains(key)) slot = j.at(key).get<std::remove_reference_t<decltype(*slot)>>();
            };
            try {
                pick("r", merged.r);
                pick("s", merged.s);
                pick("b", merged.b);
                pick("ell", merged.ell);
                pick("a", merged.a);
            } catch (const nlohmann::json::exception& e) {
                throw ValidationError(ValidationKind::InvalidArgument, "spec file " + file + ": " + e.what());
            }
        }
        if (!merged.r || !merged.s || !merged.b || !merged.a)
            throw ValidationError(ValidationKind::InvalidArgument, "a code needs -r, -s, -b and -a (or --spec)");
        const CodeParams params = CodeParams::make(*merged.r, *merged.s);
        return {params, parse_poly(*merged.b), parse_poly(merged.ell.value_or("0")), parse_poly(*merged.a)};
    }
};

ordered_json triple_json(const GeneratorTriple& t) {
    return {{"r", t.params.r}, {"s", t.params.s}, {"b", to_string(t.b)}, {"ell", to_string(t.ell)},
            {"a", to_string(t.a)}};
}

std::string d_text(const std::optional<int>& d) { return d ? std::to_string(*d) : "none"; }

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw ValidationError(ValidationKind::InvalidArgument, "cannot write " + path);
    file << text;
}

int cmd_info(const SpecArgs& spec, bool with_distance, const std::string& format, std::ostream& out) {
    const DoubleCyclicCode code = validate(spec.triple());
    const CodeParams& p = code.params();
    const SubcodeCardinalities c = subcode_cardinalities(code);
    std::optional<int> d;
    if (with_distance) d = oracle::min_distance(code);

    if (format == "json") {
        ordered_json j{{"schema", kSchemaVersion}, {"command", "info"}};
        j.update(triple_json(code.triple()));
        j["n"] = p.n;
        j["k"] = code.dimension();
        j["kappa"] = code.kappa();
        if (with_distance) j["d"] = d ? ordered_json(*d) : ordered_json(nullptr);
        j["separable"] = is_separable(code);
        j["left_projection_generator"] = to_string(project_left(code));
        j["right_projection_generator"] = to_string(project_right(code));
        j["log2_cardinalities"] = {{"C_r", c.left},          {"C_s", c.right},
                                   {"C_r_dual", c.left_dual}, {"C_s_dual", c.right_dual},
                                   {"C_dual_r", c.dual_left}, {"C_dual_s", c.dual_right}};
        out << j.dump(2) << "\n";
        return kSuccess;
    }
    out << "r = " << p.r << "\ns = " << p.s << "\nn = " << p.n << "\n";
    out << "b = " << code.b() << "\nell = " << code.ell() << "\na = " << code.a() << "\n";
    out << "k = " << code.dimension() << "\nkappa = " << code.kappa() << "\n";
    if (with_distance) out << "d = " << d_text(d) << "\n";
    out << "separable = " << (is_separable(code) ? "true" : "false") << "\n";
    out << "C_r generator = " << project_left(code) << "\nC_s generator = " << project_right(code) << "\n";
    out << "log2 |C_r| = " << c.left << "\nlog2 |C_s| = " << c.right << "\n";
    out << "log2 |(C_r)^perp| = " << c.left_dual << "\nlog2 |(C_s)^perp| = " << c.right_dual << "\n";
    out << "log2 |(C^perp)_r| = " << c.dual_left << "\nlog2 |(C^perp)_s| = " << c.dual_right << "\n";
    return kSuccess;
}

int cmd_dual(const SpecArgs& spec, bool check, const std::string& format, const std::string& output,
             std::ostream& out) {
    const DoubleCyclicCode code = validate(spec.triple());
    const DualTriple dual = dual_triple(code);
    const DoubleCyclicCode dual_c = validate(dual.as_triple(code.params()));
    std::optional<bool> verified;
    if (check) verified = oracle::enumerate(dual_c) == oracle::nullspace_dual(code);

    ordered_json spec_file{{"schema", kSchemaVersion}};
    spec_file.update(triple_json(dual_c.triple()));
    spec_file["rho"] = to_string(dual.rho);
    spec_file["lambda"] = to_string(dual.lambda);
    if (!output.empty()) write_output(output, spec_file.dump(2) + "\n", out);

    if (format == "json") {
        ordered_json j = spec_file;
        j["command"] = "dual";
        if (verified) j["verified"] = *verified;
        out << j.dump(2) << "\n";
    } else {
        out << "b = " << dual_c.b() << "\nell = " << dual_c.ell() << "\na = " << dual_c.a() << "\n";
        out << "rho = " << dual.rho << "\nlambda = " << dual.lambda << "\n";
        if (verified) out << (*verified ? "verified" : "MISMATCH: closed-form dual differs from nullspace dual") << "\n";
    }
    return verified.value_or(true) ? kSuccess : kInternal;
}

int cmd_matrix(const SpecArgs& spec, bool standard, std::ostream& out) {
    const DoubleCyclicCode code = validate(spec.triple());
    if (!standard) {
        out << generator_matrix(code).to_string();
        return kSuccess;
    }
    const StandardForm form = standard_form(code);
    out << form.matrix.to_string();
    out << "blocks: " << form.left_identity << " " << form.kappa << " " << form.right_identity << "\n";
    out << "permutation:";
    for (int c : form.matrix.column_permutation) out << " " << c;
    out << "\n";
    return kSuccess;
}

int cmd_enumerate(int r, int s, const std::string& format, int max_dim, int max_length, const std::string& output,
                  std::ostream& out) {
    catalog::CatalogOptions options;
    options.max_distance_dim = max_dim;
    options.max_length = max_length;
    const auto entries = catalog::enumerate_codes(r, s, options);
    std::ostringstream text;
    if (format == "json") {
        ordered_json codes = ordered_json::array();
        for (const auto& e : entries) {
            ordered_json j = triple_json(e.triple);
            j["k"] = e.k;
            j["d"] = e.d ? ordered_json(*e.d) : ordered_json(nullptr);
            j["separable"] = e.separable;
            j["selfdual"] = e.selfdual;
            codes.push_back(std::move(j));
        }
        ordered_json j{{"schema", kSchemaVersion}, {"r", r}, {"s", s}, {"count", entries.size()}, {"codes", codes}};
        text << j.dump(2) << "\n";
    } else {
        text << "r,s,b,ell,a,k,d,separable,selfdual\n";
        for (const auto& e : entries)
            text << r << "," << s << "," << to_string(e.triple.b) << "," << to_string(e.triple.ell) << ","
                 << to_string(e.triple.a) << "," << e.k << "," << (e.d ? std::to_string(*e.d) : "") << ","
                 << (e.separable ? "true" : "false") << "," << (e.selfdual ? "true" : "false") << "\n";
    }
    write_output(output, text.str(), out);
    return kSuccess;
}

int cmd_verify(const SpecArgs& spec, bool inject_fault, std::ostream& out) {
    const DoubleCyclicCode code = validate(spec.triple());
    VerifyOptions options;
    options.corrupt_dual = inject_fault;
    bool all = true;
    for (const auto& result : verify_instance(code, options)) {
        all = all && result.passed;
        out << (result.passed ? "PASS " : "FAIL ") << result.name;
        if (!result.detail.empty()) out << ": " << result.detail;
        out << "\n";
    }
    return all ? kSuccess : kInternal;
}

int cmd_mindist(const SpecArgs& spec, std::ostream& out) {
    const DoubleCyclicCode code = validate(spec.triple());
    out << "d = " << d_text(oracle::min_distance(code)) << "\n";
    return kSuccess;
}

int cmd_encode(const SpecArgs& spec, const std::string& message, std::ostream& out) {
    const DoubleCyclicCode code = validate(spec.triple());
    BitVector bits = message == "-" ? BitVector(0) : BitVector::from_string(message);
    out << encode(code, bits).to_string() << "\n";
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"z2dc: Z2-double cyclic codes"};
    app.require_subcommand(1);

    SpecArgs spec;
    std::string format = "text";
    std::string output;
    bool with_distance = false, check = false, standard = false, inject_fault = false;
    int enum_r = 0, enum_s = 0;
    int max_dim = oracle::kEnumerationCap;
    int max_length = catalog::kDefaultMaxLength;
    std::string message;

    auto* info = app.add_subcommand("info", "dimension, kappa, projections and subcode sizes");
    spec.attach(*info);
    info->add_flag("--distance,-d", with_distance, "also compute the minimum distance exhaustively");
    info->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* dual = app.add_subcommand("dual", "closed-form generators of the dual code");
    spec.attach(*dual);
    dual->add_flag("--check", check, "compare against the nullspace dual");
    dual->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    dual->add_option("--output,-o", output, "write the dual as a JSON spec file");

    auto* matrix = app.add_subcommand("matrix", "generator matrix");
    spec.attach(*matrix);
    matrix->add_flag("--standard", standard, "permuted standard form and its column permutation");

    auto* enumerate = app.add_subcommand("enumerate", "catalog of every code for (r, s)");
    enumerate->add_option("-r", enum_r, "left block length")->required();
    enumerate->add_option("-s", enum_s, "right block length")->required();
    enumerate->add_option("--format", format = "csv")->check(CLI::IsMember({"csv", "json"}));
    enumerate->add_option("--max-dim", max_dim, "largest k for which d is computed");
    enumerate->add_option("--max-length", max_length, "raise the r, s limit (n stays <= 24)");
    enumerate->add_option("--output,-o", output, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "check every structural and duality property");
    spec.attach(*verify);
    verify->add_flag("--inject-fault", inject_fault, "corrupt the dual triple (negative control)")
        ->group("");

    auto* mindist = app.add_subcommand("mindist", "exhaustive minimum distance");
    spec.attach(*mindist);

    auto* enc = app.add_subcommand("encode", "encode a message with the spanning-set rows");
    spec.attach(*enc);
    enc->add_option("--message,-m", message, "message bits (length k; '-' for k = 0)")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    }
    if (enumerate->parsed() && format == "text") format = "csv";

    try {
        if (info->parsed()) return cmd_info(spec, with_distance, format, out);
        if (dual->parsed()) return cmd_dual(spec, check, format, output, out);
        if (matrix->parsed()) return cmd_matrix(spec, standard, out);
        if (enumerate->parsed()) return cmd_enumerate(enum_r, enum_s, format, max_dim, max_length, output, out);
        if (verify->parsed()) return cmd_verify(spec, inject_fault, out);
        if (mindist->parsed()) return cmd_mindist(spec, out);
        if (enc->parsed()) return cmd_encode(spec, message, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}

}  // namespace z2dc::cli
