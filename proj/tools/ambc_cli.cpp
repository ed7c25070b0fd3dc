#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ambc/asymptotic.hpp"
#include "ambc/backward.hpp"
#include "ambc/channels.hpp"
#include "ambc/forward.hpp"
#include "ambc/render.hpp"
#include "ambc/shi_algorithm.hpp"
#include "ambc/verify.hpp"

namespace {

using namespace ambc;

Window read_window(const std::string& text, i64 n) {
    if (!text.empty() && text.front() == '{') return window_from_json(text);
    return parse_window(text, n);
}

OmegaTriple read_triple(const std::string& text, i64 n) {
    if (!text.empty() && text.front() == '{') return triple_from_json(text, n);
    return triple_from_text(text, n);
}

std::string tabloid_line(const std::vector<i64>& row) {
    std::string out;
    for (size_t i = 0; i < row.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(row[i]);
    }
    return out;
}

int cmd_forward(i64 n, const std::string& window_text, const std::string& policy, bool json,
                bool trace) {
    Window w = read_window(window_text, n);
    if (trace) {
        Window cur = w;
        int step_no = 0;
        while (!cur.is_empty()) {
            Numbering d = policy == "ne" ? ne_numbering(cur) : sw_numbering(cur);
            ForwardStep step = forward_step(cur, d);
            std::cout << "step " << ++step_no << ": w = " << to_text(cur) << "\n";
            std::cout << "  numbering:";
            for (const auto& [row, v] : d.values) std::cout << " d(" << row << ")=" << v;
            std::cout << " (period " << d.period << ")\n";
            std::cout << "  stream: " << stream_to_json(step.stream) << "\n";
            cur = step.next;
        }
    }
    OmegaTriple t = policy == "ne" ? phi_with_numbering_policy(w, NumberingPolicy::NE) : phi(w);
    std::cout << (json ? triple_to_json(t) : to_text(t)) << "\n";
    return 0;
}

int cmd_backward(i64 n, const std::string& triple_text, bool json) {
    OmegaTriple t = read_triple(triple_text, n);
    Window w = psi(t);
    std::cout << (json ? window_to_json(w) : to_text(w)) << "\n";
    return 0;
}

int cmd_shi(i64 n, const std::string& window_text) {
    Tabloid p = shi_p(read_window(window_text, n));
    for (const auto& row : p.rows) std::cout << tabloid_line(row) << "\n";
    return 0;
}

int cmd_asymptotic(i64 n, const std::string& window_text, i64 max_periods) {
    Window w = read_window(window_text, n);
    Stabilization st = stabilized_p(w, max_periods);
    std::cout << "stabilizes at i0 = " << st.start << "\n";
    for (const auto& row : st.p.rows) std::cout << tabloid_line(row) << "\n";
    return 0;
}

int cmd_render(i64 n, const std::string& window_text, const std::string& rows,
               const std::string& numbering, const std::string& stream_json) {
    Window w = read_window(window_text, n);
    RenderOptions opts;
    if (!rows.empty()) {
        auto dots = rows.find("..");
        if (dots == std::string::npos) throw ParseError("--rows expects a..b");
        opts.row_lo = std::stoll(rows.substr(0, dots));
        opts.row_hi = std::stoll(rows.substr(dots + 2));
    }
    if (numbering == "sw")
        opts.numbering = RenderNumbering::SW;
    else if (numbering == "ne")
        opts.numbering = RenderNumbering::NE;
    else if (numbering == "backward")
        opts.numbering = RenderNumbering::Backward;
    else
        throw ParseError("--numbering expects sw, ne, or backward");
    if (!stream_json.empty()) opts.stream = stream_from_json(stream_json, n);
    std::cout << render(w, opts);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affine Matrix-Ball Construction toolkit"};
    app.require_subcommand(1);

    i64 n = 0;
    std::string window_text, triple_text, policy = "sw", rows, numbering = "sw", stream_json,
                              suite = "all";
    bool json = false, trace = false;
    i64 max_periods = 60, n_max = 3, shift_max = 2;

    auto* fwd = app.add_subcommand("forward", "Run the forward map on a window");
    fwd->add_option("-n", n, "period")->required();
    fwd->add_option("window", window_text, "window text or JSON")->required();
    fwd->add_option("--policy", policy, "channel numbering policy: sw|ne")
        ->check(CLI::IsMember({"sw", "ne"}));
    fwd->add_flag("--json", json, "JSON output");
    fwd->add_flag("--trace", trace, "print per-step streams and numberings");

    auto* bwd = app.add_subcommand("backward", "Run the backward map on a triple");
    bwd->add_option("-n", n, "period")->required();
    bwd->add_option("triple", triple_text, "triple text or JSON")->required();
    bwd->add_flag("--json", json, "JSON output");

    auto* shi = app.add_subcommand("shi", "Shi insertion tabloid P'");
    shi->add_option("-n", n, "period")->required();
    shi->add_option("window", window_text, "window text or JSON")->required();

    auto* asymp = app.add_subcommand("asymptotic", "Stabilized bump-insertion tabloid");
    asymp->add_option("-n", n, "period")->required();
    asymp->add_option("window", window_text, "window text or JSON")->required();
    asymp->add_option("--max-periods", max_periods, "stabilization budget in periods");

    auto* rnd = app.add_subcommand("render", "ASCII diagram of the ball matrix");
    rnd->add_option("-n", n, "period")->required();
    rnd->add_option("window", window_text, "window text or JSON")->required();
    rnd->add_option("--rows", rows, "row range a..b");
    rnd->add_option("--numbering", numbering, "sw|ne|backward");
    rnd->add_option("--stream", stream_json, "stream JSON for backward numbering");

    auto* ver = app.add_subcommand("verify", "Run the theorem verification suites");
    ver->add_option("--n-max", n_max, "largest period");
    ver->add_option("--shift-max", shift_max, "window shift bound");
    ver->add_option("--suite", suite, "roundtrip|shi|weyl|gravity|asymptotic|distalt|all")
        ->check(CLI::IsMember({"roundtrip", "shi", "weyl", "gravity", "asymptotic", "distalt", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fwd->parsed()) return cmd_forward(n, window_text, policy, json, trace);
        if (bwd->parsed()) return cmd_backward(n, triple_text, json);
        if (shi->parsed()) return cmd_shi(n, window_text);
        if (asymp->parsed()) return cmd_asymptotic(n, window_text, max_periods);
        if (rnd->parsed()) return cmd_render(n, window_text, rows, numbering, stream_json);
        if (ver->parsed()) {
            ambc::VerifyOptions opts;
            opts.n_max = n_max;
            opts.shift_max = shift_max;
            opts.suite = suite;
            opts.seed = ambc::seed_from_env();
            return run_verify(opts, std::cout) ? 0 : 1;
        }
    } catch (const ambc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ambc::NotInjective& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
