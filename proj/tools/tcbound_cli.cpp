// Command-line front end; talks to the core only through tcbound.h.
#include "tcbound/tcbound.h"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kInconsistent = 3 };

struct CString {
    char* p = nullptr;
    ~CString() { tcb_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

using DescriptorPtr = std::unique_ptr<tcb_descriptor, decltype(&tcb_descriptor_free)>;
using ReportPtr = std::unique_ptr<tcb_report, decltype(&tcb_report_free)>;

int exit_for(tcb_status s)
{
    switch (s) {
    case TCB_OK: return kOk;
    case TCB_INCONSISTENT: return kInconsistent;
    case TCB_CHECK_FAILED: return kVerifyFailed;
    default: return kInputError;
    }
}

bool write_atomic(const fs::path& path, const std::string& content)
{
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!(f << content))
            return false;
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        return false;
    }
    return true;
}

struct Input {
    std::string label;
    std::string json_text;  // empty: builtin
    std::string builtin;
};

// Files, directories (every *.json inside, sorted) or built-in names. A
// missing file whose stem names a built-in falls back to the built-in.
bool collect(const std::string& arg, std::vector<Input>& out)
{
    const fs::path p(arg);
    auto read_file = [&](const fs::path& f) {
        std::ifstream in(f, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        out.push_back({f.string(), ss.str(), {}});
    };
    if (fs::is_directory(p)) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(p))
            if (e.is_regular_file() && e.path().extension() == ".json")
                files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files)
            read_file(f);
        return true;
    }
    if (fs::is_regular_file(p)) {
        read_file(p);
        return true;
    }
    for (const std::string& name : {arg, p.stem().string()}) {
        for (size_t i = 0; i < tcb_builtin_count(); ++i)
            if (name == tcb_builtin_name(i)) {
                out.push_back({name, {}, name});
                return true;
            }
    }
    std::cerr << "error: '" << arg << "' is neither a file, a directory nor a built-in descriptor\n";
    return false;
}

int run_one(const Input& in, const tcb_options& opts, bool want_json, bool want_text, const std::string& out_dir)
{
    tcb_descriptor* raw = nullptr;
    tcb_status s = in.builtin.empty() ? tcb_descriptor_parse(in.json_text.c_str(), &raw)
                                      : tcb_descriptor_builtin(in.builtin.c_str(), &raw);
    if (s != TCB_OK) {
        std::cerr << in.label << ": " << tcb_status_name(s) << " error: " << tcb_last_error() << "\n";
        return exit_for(s);
    }
    DescriptorPtr d(raw, tcb_descriptor_free);

    tcb_report* rraw = nullptr;
    s = tcb_evaluate(d.get(), &opts, &rraw);
    if (s != TCB_OK) {
        std::cerr << in.label << ": " << tcb_status_name(s) << " error: " << tcb_last_error() << "\n";
        const char* lo = nullptr;
        const char* up = nullptr;
        if (s == TCB_INCONSISTENT && tcb_last_conflict(&lo, &up) == TCB_OK)
            std::cerr << "  conflicting rules: " << lo << " vs " << up << "\n";
        return exit_for(s);
    }
    ReportPtr r(rraw, tcb_report_free);

    CString js, txt;
    if (want_json && tcb_report_json(r.get(), &js.p) != TCB_OK)
        return kInputError;
    if (want_text && tcb_report_text(r.get(), &txt.p) != TCB_OK)
        return kInputError;

    if (out_dir.empty()) {
        if (want_text)
            std::cout << txt.str();
        if (want_json)
            std::cout << js.str();
        return kOk;
    }
    const fs::path base = fs::path(out_dir) / tcb_descriptor_name(d.get());
    if ((want_json && !write_atomic(base.string() + ".json", js.str())) ||
        (want_text && !write_atomic(base.string() + ".txt", txt.str()))) {
        std::cerr << "error: cannot write report for " << in.label << " into " << out_dir << "\n";
        return kInputError;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified bounds on topological complexity"};
    app.set_version_flag("--version", std::string("tcbound ") + tcb_version());
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Evaluate descriptors and emit bound reports");
    std::vector<std::string> inputs;
    bool json_only = false, text_only = false, exhaustive = false, reduced = false;
    unsigned max_depth = 0;
    std::string out_dir;
    run->add_option("inputs", inputs, "Descriptor files, directories or built-in names")->required();
    run->add_flag("--json", json_only, "Emit only the JSON report");
    run->add_flag("--text", text_only, "Emit only the text report");
    run->add_option("--out", out_dir, "Write <name>.json / <name>.txt into this directory");
    run->add_option("--max-depth", max_depth, "Cup-length search depth (0 = 2 dim)");
    run->add_flag("--exhaustive", exhaustive, "Search products of all positive-degree zero-divisors");
    run->add_flag("--reduced", reduced, "Report reduced TC");

    auto* verify = app.add_subcommand("verify", "Run the built-in self-checks");
    std::string only;
    bool inject_fault = false;
    verify->add_option("--only", only, "Restrict to a module or a single check");
    verify->add_flag("--inject-fault", inject_fault, "Corrupt a preset ring to exercise the harness");

    auto* examples = app.add_subcommand("examples", "List or write the built-in descriptors");
    std::string write_dir;
    examples->add_option("--write", write_dir, "Write every built-in as <name>.json into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    if (*run) {
        std::vector<Input> all;
        for (const auto& a : inputs)
            if (!collect(a, all))
                return kInputError;
        if (!out_dir.empty()) {
            std::error_code ec;
            fs::create_directories(out_dir, ec);
            if (ec) {
                std::cerr << "error: cannot create " << out_dir << ": " << ec.message() << "\n";
                return kInputError;
            }
        }
        tcb_options opts;
        tcb_options_init(&opts);
        opts.max_depth = max_depth;
        opts.exhaustive = exhaustive;
        opts.reduced = reduced;
        const bool want_json = json_only || !text_only;
        const bool want_text = text_only || !json_only;
        int worst = kOk;
        for (const auto& in : all)
            worst = std::max(worst, run_one(in, opts, want_json, want_text, out_dir));
        return worst;
    }

    if (*verify) {
        CString table;
        size_t failed = 0;
        const tcb_status s = tcb_verify(only.empty() ? nullptr : only.c_str(), inject_fault, &table.p, &failed);
        std::cout << table.str();
        if (s != TCB_OK && s != TCB_CHECK_FAILED) {
            std::cerr << "error: " << tcb_last_error() << "\n";
            return kInputError;
        }
        std::cout << (failed ? std::to_string(failed) + " check(s) failed\n" : std::string("all checks passed\n"));
        return failed ? kVerifyFailed : kOk;
    }

    if (*examples) {
        for (size_t i = 0; i < tcb_builtin_count(); ++i) {
            const char* name = tcb_builtin_name(i);
            if (write_dir.empty()) {
                std::cout << name << "\n";
                continue;
            }
            CString js;
            if (tcb_builtin_json(name, &js.p) != TCB_OK) {
                std::cerr << "error: " << tcb_last_error() << "\n";
                return kInputError;
            }
            std::error_code ec;
            fs::create_directories(write_dir, ec);
            if (!write_atomic(fs::path(write_dir) / (std::string(name) + ".json"), js.str())) {
                std::cerr << "error: cannot write into " << write_dir << "\n";
                return kInputError;
            }
        }
        return kOk;
    }
    return kOk;
}
