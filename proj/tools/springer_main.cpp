#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "springer/bijection.hpp"
#include "springer/paths.hpp"
#include "springer/series.hpp"
#include "springer/snakes.hpp"
#include "springer/triangles.hpp"
#include "springer/verify.hpp"

namespace {

// 0 = success, 1 = verification failure, 2 = usage or input error
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_file);
    if (!os) throw std::invalid_argument("cannot open output file '" + out_file + "'");
    os << text;
}

int effective_cap(int requested_n, std::optional<int> cap_flag, bool i_know) {
    const int cap = cap_flag.value_or(springer::kDefaultEnumerationCap);
    if (cap > springer::kDefaultEnumerationCap && !i_know)
        throw std::invalid_argument(
            "raising the enumeration cap above " +
            std::to_string(springer::kDefaultEnumerationCap) +
            " requires --i-know (object counts grow super-exponentially)");
    if (requested_n > cap)
        throw std::length_error("n=" + std::to_string(requested_n) + " exceeds the enumeration cap " +
                                std::to_string(cap) + "; pass --cap " + std::to_string(requested_n) +
                                " --i-know to proceed");
    return cap;
}

std::string run_snakes(int n, const std::string& format, std::optional<int> cap_flag, bool i_know) {
    const int cap = effective_cap(n, cap_flag, i_know);
    std::ostringstream os;
    if (format == "plain") {
        springer::for_each_snake(
            n, [&](const springer::Snake& s) { os << springer::to_string(s) << '\n'; }, cap);
    } else if (format == "csv") {
        os << "index,entries\n";
        long long idx = 0;
        springer::for_each_snake(
            n,
            [&](const springer::Snake& s) {
                os << idx++ << ",\"" << springer::to_string(s) << "\"\n";
            },
            cap);
    } else if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        springer::for_each_snake(
            n, [&](const springer::Snake& s) { arr.push_back(s.entries()); }, cap);
        os << arr.dump() << '\n';
    } else {
        throw std::invalid_argument("unknown format '" + format + "' (expected plain, csv or json)");
    }
    return os.str();
}

std::string run_map_phi(const std::string& snake_text, bool trace) {
    const springer::Snake snake(springer::parse_signed_permutation(snake_text));
    const springer::LabeledBallotPath image = springer::phi(snake);
    std::string out = springer::to_string(image) + "\n";
    if (trace) out += springer::trace_to_json(springer::psi_trace(image)) + "\n";
    return out;
}

std::string run_map_psi(const std::string& path_text, const std::string& labels_text, bool trace) {
    const springer::LabeledBallotPath lpath(springer::parse_path(path_text),
                                            springer::parse_labels(labels_text));
    if (trace) {
        const springer::PsiTrace t = springer::psi_trace(lpath);
        return springer::to_string(t.result) + "\n" + springer::trace_to_json(t) + "\n";
    }
    return springer::to_string(springer::psi(lpath)) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of snakes of type B, labeled ballot paths and Springer numbers"};
    app.require_subcommand(1);

    // snakes
    auto* snakes_cmd = app.add_subcommand("snakes", "Enumerate snakes of type B_n");
    int snakes_n = 0;
    std::string snakes_format = "plain";
    std::optional<int> snakes_cap;
    bool snakes_i_know = false;
    std::string snakes_out;
    snakes_cmd->add_option("--n", snakes_n, "Length n")->required()->check(CLI::NonNegativeNumber);
    snakes_cmd->add_option("--format", snakes_format, "plain, csv or json")
        ->envname("SPRINGER_FORMAT");
    snakes_cmd->add_option("--cap", snakes_cap, "Enumeration cap override");
    snakes_cmd->add_flag("--i-know", snakes_i_know, "Acknowledge a cap above the default");
    snakes_cmd->add_option("--out", snakes_out, "Write output to a file");

    // map phi / map psi
    auto* map_cmd = app.add_subcommand("map", "Apply the snake <-> labeled ballot path bijection");
    map_cmd->require_subcommand(1);
    auto* phi_cmd = map_cmd->add_subcommand("phi", "Snake to labeled ballot path");
    std::string phi_snake, phi_out;
    bool phi_trace = false;
    phi_cmd->add_option("--snake", phi_snake, "Snake, e.g. 2,-1,5,4,7,-6,-3")->required();
    phi_cmd->add_flag("--trace", phi_trace, "Also print the stage-by-stage JSON trace");
    phi_cmd->add_option("--out", phi_out, "Write output to a file");
    auto* psi_cmd = map_cmd->add_subcommand("psi", "Labeled ballot path to snake");
    std::string psi_path, psi_labels, psi_out;
    bool psi_trace_flag = false;
    psi_cmd->add_option("--path", psi_path, "Steps, e.g. uuudduu")->required();
    psi_cmd->add_option("--labels", psi_labels, "Labels, e.g. 0,1,1,0,1,1,2")->required();
    psi_cmd->add_flag("--trace", psi_trace_flag, "Also print the stage-by-stage JSON trace");
    psi_cmd->add_option("--out", psi_out, "Write output to a file");

    // triangle
    auto* tri_cmd = app.add_subcommand("triangle", "Emit a B/E/T triangle");
    std::string tri_kind = "B", tri_format = "csv", tri_out;
    int tri_rows = 8;
    tri_cmd->add_option("--kind", tri_kind, "B, E or T")->required();
    tri_cmd->add_option("--rows", tri_rows, "Rows 0..n")->required()->check(CLI::NonNegativeNumber);
    tri_cmd->add_option("--format", tri_format, "csv or json")->envname("SPRINGER_FORMAT");
    tri_cmd->add_option("--out", tri_out, "Write output to a file");

    // series
    auto* ser_cmd = app.add_subcommand("series", "Emit exact series coefficients");
    std::string ser_name, ser_out;
    int ser_order = springer::kDefaultSeriesOrder;
    bool ser_ordinary = false;
    ser_cmd->add_option("--name", ser_name,
                        "sin, cos, sec, tan, sec2x_cosx, sec2x_sinx or springer_egf")
        ->required();
    ser_cmd->add_option("--order", ser_order, "Truncation order")->check(CLI::NonNegativeNumber);
    ser_cmd->add_flag("--ordinary", ser_ordinary,
                      "Dump plain coefficients a_n instead of the EGF-normalized n! a_n");
    ser_cmd->add_option("--out", ser_out, "Write output to a file");

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::string ver_suite = "all", ver_out;
    int ver_max_n = -1;
    std::optional<int> ver_cap;
    bool ver_i_know = false;
    ver_cmd->add_option("--suite", ver_suite,
                        "all, bijection, alpha, series, triangles, dyck or levelcodes");
    ver_cmd->add_option("--max-n", ver_max_n,
                        "Bound for the suite (defaults: 8 exhaustive, 12 series)");
    ver_cmd->add_option("--cap", ver_cap, "Enumeration cap override");
    ver_cmd->add_flag("--i-know", ver_i_know, "Acknowledge a cap above the default");
    ver_cmd->add_option("--out", ver_out, "Write output to a file");

    try {
        app.parse(argc, argv);

        if (*snakes_cmd) {
            emit(run_snakes(snakes_n, snakes_format, snakes_cap, snakes_i_know), snakes_out);
        } else if (*phi_cmd) {
            emit(run_map_phi(phi_snake, phi_trace), phi_out);
        } else if (*psi_cmd) {
            emit(run_map_psi(psi_path, psi_labels, psi_trace_flag), psi_out);
        } else if (*tri_cmd) {
            const springer::Triangle t =
                springer::Triangle::build(springer::parse_triangle_kind(tri_kind), tri_rows);
            if (tri_format == "csv")
                emit(t.to_csv(), tri_out);
            else if (tri_format == "json")
                emit(t.to_json() + "\n", tri_out);
            else
                throw std::invalid_argument("unknown format '" + tri_format +
                                            "' (expected csv or json)");
        } else if (*ser_cmd) {
            const springer::EgfSeries s = springer::named_series(ser_name, ser_order);
            emit(springer::series_to_json(s, !ser_ordinary) + "\n", ser_out);
        } else if (*ver_cmd) {
            if (ver_max_n >= 0) effective_cap(ver_max_n, ver_cap, ver_i_know);
            const springer::VerificationReport report =
                springer::run_verification(ver_suite, ver_max_n);
            emit(springer::format_report(report), ver_out);
            return report.all_pass() ? kExitOk : kExitVerifyFailed;
        }
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
}
