#include <jumploci_cli/cli.hpp>

#include "cli_internal.hpp"

#include <jumploci/exact/errors.hpp>

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace jl::cli {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json document(const std::string& kind) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

void add_group_check(CLI::App* group, const std::string& name, Dispatch& d) {
  auto flag = std::make_shared<bool>(false);
  group->add_flag("--check", *flag, "Run the invariant suite of this module");
  group->callback([group, flag, name, &d] {
    if (*flag && group->get_subcommands().empty()) d.action = [name] { return run_checks(name); };
  });
}

namespace {

int emit(const Outcome& o, const std::string& format, const std::string& output,
         std::ostream& out, std::ostream& err) {
  std::string text = format == "table" ? render_table(o.doc) : o.doc.dump(2) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << output << "\n";
      return 2;
    }
    f << text;
  }
  return o.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for cohomology jump loci and determinantal singularities",
               "jumploci"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "json", output;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--output,-o", output, "Write the document to this file");

  Dispatch d;
  add_linf(app, d);
  add_defjump(app, d);
  add_detvar(app, d);
  add_bn(app, d);
  add_oracle(app, d);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (!d.action) {
    err << "error: no command selected (use a subcommand or --check)\n";
    return 2;
  }

  try {
    return emit(d.action(), format, output, out, err);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal invariant failure: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace jl::cli
