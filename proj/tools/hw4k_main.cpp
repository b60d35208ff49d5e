#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hw4k/dispatch.hpp"
#include "hw4k/serialize.hpp"
#include "hw4k/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitInvalidParams = 3;
constexpr int kExitBadFile = 4;

int write_certificate(const hw4k::Certificate& cert, const std::string& format,
                      const std::string& out_path) {
    const std::string payload = format == "text" ? hw4k::certificate_to_text(cert)
                                                 : hw4k::certificate_to_json(cert);
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitBadFile;
    }
    out << payload;
    return 0;
}

int run_construct(int k, int t, int r, int n, bool hamilton_only, const std::string& format,
                  const std::string& out_path) {
    try {
        const hw4k::Certificate cert =
            hamilton_only ? hw4k::construct_hamilton_only(n) : hw4k::construct_hw(k, t, r);
        return write_certificate(cert, format, out_path);
    } catch (const hw4k::UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const hw4k::InvalidParamsError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitInvalidParams;
    }
}

int run_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitBadFile;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    hw4k::Certificate cert;
    try {
        cert = hw4k::certificate_from_string(buf.str());
    } catch (const hw4k::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitBadFile;
    }
    const hw4k::VerifyReport report = hw4k::verify_certificate(cert);
    for (const auto& c : report.checks) {
        std::cout << "check " << c.id << " [" << c.name << "]: " << (c.pass ? "pass" : "FAIL");
        if (!c.pass) std::cout << " -- " << c.detail;
        std::cout << "\n";
    }
    return report.all_pass() ? 0 : kExitVerifyFailed;
}

int run_sweep(int k, int t) {
    if (k < 1 || t < 1) {
        std::cerr << "invalid parameters: k and t must be positive\n";
        return kExitInvalidParams;
    }
    const int n = 4 * k * t;
    bool all_ok = true;
    std::cout << "n = " << n << ", r in [0, " << (n - 2) / 2 << "]\n";
    for (int r = 0; r <= (n - 2) / 2; ++r) {
        std::string status;
        switch (hw4k::supported(k, t, r)) {
            case hw4k::Support::unsupported_by_paper:
                status = "unsupported";
                break;
            case hw4k::Support::invalid:
                status = "invalid";
                all_ok = false;
                break;
            case hw4k::Support::yes: {
                try {
                    const auto cert = hw4k::construct_hw(k, t, r);
                    status = hw4k::verify_certificate(cert).all_pass() ? "pass" : "VERIFY FAILED";
                } catch (const std::exception& e) {
                    status = std::string("ERROR: ") + e.what();
                }
                if (status != "pass") all_ok = false;
                break;
            }
        }
        std::cout << "r = " << r << ": " << status << "\n";
    }
    return all_ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constructive 2-factorizations of K_n - I into Hamilton cycles and C_4k-factors"};
    app.require_subcommand(1);

    int k = 1, t = 1, r = 0, n = 0;
    bool hamilton_only = false;
    std::string format = "json", out_path;

    auto* construct = app.add_subcommand("construct", "build and write a certificate");
    construct->add_option("--k", k, "cycle parameter (cycle length 4k)");
    construct->add_option("--t", t, "block parameter (n = 4kt)");
    construct->add_option("--r", r, "number of Hamilton-cycle factors");
    construct->add_option("--n", n, "order for --hamilton-only mode");
    construct->add_flag("--hamilton-only", hamilton_only, "s = 0 branch for arbitrary n >= 3");
    construct->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    construct->add_option("--out", out_path, "output path (default stdout)");

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "check a certificate file");
    verify->add_option("path", verify_path, "certificate file")->required();

    int sk = 1, st = 1, jobs = 1;
    auto* sweep = app.add_subcommand("sweep", "construct and verify every supported r");
    sweep->add_option("--k", sk, "cycle parameter")->required();
    sweep->add_option("--t", st, "block parameter")->required();
    sweep->add_option("--jobs", jobs, "accepted for compatibility; runs serially");

    CLI11_PARSE(app, argc, argv);

    if (construct->parsed()) {
        if (hamilton_only && n == 0) {
            std::cerr << "invalid parameters: --hamilton-only requires --n\n";
            return kExitInvalidParams;
        }
        return run_construct(k, t, r, n, hamilton_only, format, out_path);
    }
    if (verify->parsed()) return run_verify(verify_path);
    return run_sweep(sk, st);
}
