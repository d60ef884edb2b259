#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "harmtile/count.hpp"
#include "harmtile/json_io.hpp"
#include "harmtile/render.hpp"

// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 enumeration cap exceeded.

namespace {

using namespace harmtile;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

int run_count(int width, int height, bool as_json) {
    CountBreakdown b = count_breakdown(width, height);
    if (as_json) {
        std::cout << count_to_json(b) << "\n";
    } else {
        std::cout << "tilings(" << width << "×" << height << ") = " << b.count.str()
                  << "  [c=" << b.c << ", beta=" << b.beta << ", omega=" << b.omega << "]\n";
    }
    return kExitOk;
}

int run_enumerate(int width, int height, const std::string& out_dir, const std::string& format,
                  int cap) {
    std::vector<Tiling> tilings = enumerate_tilings(width, height, cap);

    std::filesystem::create_directories(out_dir);
    Manifest manifest;
    manifest.width = width;
    manifest.height = height;
    manifest.total = static_cast<long long>(tilings.size());

    int index_white = 0, index_black = 0;
    for (const Tiling& t : tilings) {
        int& index = (t.color == Color::White) ? index_white : index_black;
        std::string ext = (format == "svg") ? "svg" : (format == "json") ? "json" : "txt";
        std::string name = "tiling_" + color_name(t.color) + "_" + std::to_string(index) + "." + ext;

        std::ofstream out(std::filesystem::path(out_dir) / name, std::ios::binary);
        if (format == "svg")
            out << tiling_to_svg(t);
        else if (format == "json")
            out << tiling_to_json(t) << "\n";
        else
            out << tiling_to_ascii(t);

        manifest.entries.push_back(
            {name, color_name(t.color), index, static_cast<int>(t.tiles.size())});
        ++index;
    }

    std::ofstream mout(std::filesystem::path(out_dir) / "manifest.json", std::ios::binary);
    mout << manifest_to_json(manifest);

    std::cout << "wrote " << tilings.size() << " tilings (" << index_white << " white, "
              << index_black << " black) to " << out_dir << "\n";
    return kExitOk;
}

int run_verify(int max_side, bool dims_only, bool as_json) {
    VerifyOptions options;
    options.max_side = max_side;
    options.dims_only = dims_only;
    VerifyReport report = verify_all(options);

    if (as_json) {
        std::cout << report_to_json(report);
    } else {
        for (const CheckResult& c : report.checks) {
            std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.cases << " cases)";
            if (!c.ok) std::cout << ": " << c.detail;
            std::cout << "\n";
        }
        std::cout << (report.ok ? "all checks passed\n" : "verification FAILED\n");
    }
    return report.ok ? kExitOk : kExitVerifyFailed;
}

int run_kernel(int width, int height, const std::string& polarity_name,
               const std::string& method_name, bool compare) {
    Color polarity = color_from_name(polarity_name);
    KernelMethod method = KernelMethod::Elimination;
    if (method_name == "transfer")
        method = KernelMethod::Transfer;
    else if (method_name == "structured")
        method = KernelMethod::Structured;
    else if (method_name != "elim")
        throw CLI::ValidationError("--method", "must be elim, transfer or structured");

    if (compare) {
        GridGraph g(width + 1, height + 1);
        std::vector<gf2::Gf2Vector> spans[3];
        for (int i = 0; i < 3; ++i)
            for (const auto& v :
                 kernel_basis(width, height, polarity, static_cast<KernelMethod>(i)))
                spans[i].push_back(v.to_compact());
        std::size_t len = g.num_for(polarity);
        bool equal = gf2::same_span(spans[0], spans[1], len) &&
                     gf2::same_span(spans[0], spans[2], len);
        std::cout << "spans equal: " << (equal ? "true" : "false") << "\n";
        return equal ? kExitOk : kExitVerifyFailed;
    }

    std::vector<PolarizedVector> basis = kernel_basis(width, height, polarity, method);
    std::cout << kernel_to_json(width, height, polarity, method_name, basis) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tilings of integer rectangles via harmonic functions on the grid graph"};
    app.require_subcommand(1);

    int width = 0, height = 0;
    bool as_json = false;

    auto* count = app.add_subcommand("count", "closed-form tiling count");
    count->add_option("--width", width, "rectangle width")->required();
    count->add_option("--height", height, "rectangle height")->required();
    count->add_flag("--json", as_json, "emit JSON");

    std::string out_dir = ".";
    std::string format = "svg";
    int cap = 20;
    auto* enumerate = app.add_subcommand("enumerate", "write every tiling to files");
    enumerate->add_option("--width", width, "rectangle width")->required();
    enumerate->add_option("--height", height, "rectangle height")->required();
    enumerate->add_option("--out-dir", out_dir, "output directory");
    enumerate->add_option("--format", format, "svg|json|ascii")
        ->check(CLI::IsMember({"svg", "json", "ascii"}));
    enumerate->add_option("--cap", cap, "max kernel dimension to enumerate");

    int max_side = 12;
    bool dims_only = false;
    auto* verify = app.add_subcommand("verify", "run the cross-method verification suite");
    verify->add_option("--max-side", max_side, "largest rectangle side to sweep");
    verify->add_flag("--dims-only", dims_only, "only the dimension checks");
    verify->add_flag("--json", as_json, "emit JSON");

    std::string polarity = "black";
    std::string method = "elim";
    bool compare = false;
    auto* kernel = app.add_subcommand("kernel", "print kernel basis vectors as bit grids");
    kernel->add_option("--width", width, "rectangle width")->required();
    kernel->add_option("--height", height, "rectangle height")->required();
    kernel->add_option("--polarity", polarity, "black|white")
        ->check(CLI::IsMember({"black", "white"}));
    kernel->add_option("--method", method, "elim|transfer|structured")
        ->check(CLI::IsMember({"elim", "transfer", "structured"}));
    kernel->add_flag("--compare", compare, "check that all three methods span the same kernel");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) return run_count(width, height, as_json);
        if (enumerate->parsed()) return run_enumerate(width, height, out_dir, format, cap);
        if (verify->parsed()) return run_verify(max_side, dims_only, as_json);
        if (kernel->parsed()) return run_kernel(width, height, polarity, method, compare);
    } catch (const harmtile::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
