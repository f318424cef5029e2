#include "devmatch/cli.hpp"

#include "devmatch/catalog.hpp"
#include "devmatch/matcher.hpp"
#include "devmatch/process.hpp"
#include "devmatch/profile.hpp"
#include "devmatch/report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace devmatch {

namespace {

/// Raised for unreadable inputs; reported like a document error.
struct InputError {
    std::string message;
};

std::string read_source(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError{"cannot read '" + path + "'"};
    buf << file.rdbuf();
    return buf.str();
}

Catalog resolve_catalog(const std::string& flag, std::istream& in) {
    std::string path = flag;
    if (path.empty()) {
        if (const char* env = std::getenv("DEVMATCH_CATALOG"); env != nullptr && *env != '\0') path = env;
    }
    if (path.empty()) return default_catalog();
    try {
        return load_catalog(read_source(path, in));
    } catch (const Error& e) {
        throw InputError{"catalog '" + path + "': " + e.what()};
    }
}

DisabilityProfile read_profile(const std::string& path, std::istream& in) {
    try {
        return parse_profile(read_source(path, in));
    } catch (const Error& e) {
        throw InputError{"profile '" + path + "': " + e.what()};
    }
}

WorkstationPlan read_plan(const std::string& path, std::istream& in) {
    try {
        return parse_plan(read_source(path, in));
    } catch (const Error& e) {
        throw InputError{"plan '" + path + "': " + e.what()};
    }
}

std::vector<FeasibilityFinding> checked_findings(const WorkstationPlan& plan, const Catalog& catalog,
                                                 const DisabilityProfile& profile) {
    try {
        return validate_workstation(plan, catalog, profile);
    } catch (const Error& e) {
        throw InputError{std::string("plan: ") + e.what()};
    }
}

void show_row(std::ostream& out, std::string_view title, const DeviceSpec& d, std::optional<LimbKind> kind) {
    out << title << ":\n";
    if (kind) {
        for (Category c : kLimbCategories) {
            const RequirementCell cell = d.cell(*kind, c);
            out << "  " << category_key(c) << ": "
                << (cell.constrained() ? "max " + std::to_string(cell.max()) : std::string("unconstrained")) << '\n';
        }
        return;
    }
    for (Category c : kPerceptionCategories) {
        const RequirementCell cell = d.perception_cell(c);
        out << "  " << category_key(c) << ": "
            << (cell.constrained() ? "max " + std::to_string(cell.max()) : std::string("unconstrained")) << '\n';
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classify assistive I/O devices for a human-robot workstation", "devmatch"};
    app.require_subcommand(1);

    std::string catalog_path;
    std::string profile_path;
    std::string plan_path;
    std::string format = "text";
    std::string device_id;

    auto* match = app.add_subcommand("match", "Classify every catalog device for a profile");
    match->add_option("--profile", profile_path, "Profile document")->required();
    match->add_option("--catalog", catalog_path, "Catalog document ('-' for stdin)");
    match->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    match->add_option("--plan", plan_path, "Workstation plan to check as well");

    auto* validate = app.add_subcommand("validate", "Check a workstation plan");
    validate->add_option("--plan", plan_path, "Workstation plan document")->required();
    validate->add_option("--profile", profile_path, "Profile document")->required();
    validate->add_option("--catalog", catalog_path, "Catalog document ('-' for stdin)");
    validate->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

    auto* catalog_cmd = app.add_subcommand("catalog", "Inspect the device catalog");
    catalog_cmd->add_option("--catalog", catalog_path, "Catalog document ('-' for stdin)");
    catalog_cmd->require_subcommand(1);
    auto* list = catalog_cmd->add_subcommand("list", "One line per device");
    auto* show = catalog_cmd->add_subcommand("show", "All requirement cells of one device");
    show->add_option("id", device_id, "Device id")->required();
    auto* exp = catalog_cmd->add_subcommand("export", "Write the catalog document");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (match->parsed()) {
            const Catalog catalog = resolve_catalog(catalog_path, in);
            const DisabilityProfile profile = read_profile(profile_path, in);
            MatchReport report;
            try {
                report = match_profile(profile, catalog);
            } catch (const Error& e) {
                throw InputError{std::string("profile does not fit catalog: ") + e.what()};
            }
            std::vector<FeasibilityFinding> findings;
            if (!plan_path.empty()) findings = checked_findings(read_plan(plan_path, in), catalog, profile);
            out << (format == "structured" ? render_structured(report, findings) : render_text(report, findings));
            return kExitOk;
        }
        if (validate->parsed()) {
            const Catalog catalog = resolve_catalog(catalog_path, in);
            const DisabilityProfile profile = read_profile(profile_path, in);
            const WorkstationPlan plan = read_plan(plan_path, in);
            const auto findings = checked_findings(plan, catalog, profile);
            if (format == "structured") {
                out << render_findings_structured(findings);
            } else if (findings.empty()) {
                out << "no findings\n";
            } else {
                out << render_findings_text(findings);
            }
            return has_errors(findings) ? kExitInfeasible : kExitOk;
        }
        if (catalog_cmd->parsed()) {
            const Catalog catalog = resolve_catalog(catalog_path, in);
            if (list->parsed()) {
                for (const auto& d : catalog.devices()) {
                    out << std::left << std::setw(18) << d.id << std::setw(17) << device_class_key(d.device_class)
                        << d.display_name << '\n';
                }
            } else if (show->parsed()) {
                const DeviceSpec* d = catalog.find(device_id);
                if (d == nullptr) throw InputError{"unknown device id '" + device_id + "'"};
                out << "id: " << d->id << "\nname: " << d->display_name
                    << "\nclass: " << device_class_key(d->device_class) << '\n';
                if (d->modality) out << "modality: " << modality_key(*d->modality) << '\n';
                show_row(out, "arm", *d, LimbKind::Arm);
                show_row(out, "leg", *d, LimbKind::Leg);
                show_row(out, "perception", *d, std::nullopt);
            } else if (exp->parsed()) {
                out << serialize_catalog(catalog);
            }
            return kExitOk;
        }
    } catch (const InputError& e) {
        err << "devmatch: " << e.message << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

} // namespace devmatch
