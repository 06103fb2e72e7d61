#include "flagdes/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "flagdes/classify.hpp"
#include "flagdes/io.hpp"
#include "flagdes/verify.hpp"

namespace flagdes {

namespace {

void emit(const std::string &s, const std::string &out_file, std::ostream &out) {
  if (out_file.empty()) {
    out << s;
    return;
  }
  std::ofstream f(out_file);
  if (!f) fail(Err::BadInput, "cannot open output file " + out_file);
  f << s;
}

std::string search_csv(const std::vector<SearchResult> &rs) {
  std::ostringstream os;
  os << "block,v,k,r,b,lambda\n";
  for (const auto &r : rs) {
    for (size_t i = 0; i < r.block.size(); ++i) os << (i ? " " : "") << r.block[i];
    os << ',' << r.params.v << ',' << r.params.k << ',' << r.params.r << ',' << r.params.b << ','
       << r.params.lambda << '\n';
  }
  return os.str();
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"construct, verify and search flag-transitive point-affine block designs"};
  app.require_subcommand(1);

  std::string out_file;
  bool as_json = false;
  long long cap = 100000;

  auto *verify = app.add_subcommand("verify", "verify catalog targets against expected data");
  verify->add_flag("--json", as_json, "machine-readable output");
  verify->add_option("--out", out_file, "write the report to a file");
  std::string example_id;
  int t1_line = 0, t2_line = 0;
  auto *v_example = verify->add_subcommand("example", "verify one catalog instance by id");
  v_example->add_option("id", example_id, "instance id")->required();
  auto *v_t1 = verify->add_subcommand("table1", "verify a line of the first catalog table");
  v_t1->add_option("--line", t1_line, "line number (1-20)")->required();
  auto *v_t2 = verify->add_subcommand("table2", "verify a line of the second catalog table");
  v_t2->add_option("--line", t2_line, "line number (1-13)")->required();
  auto *v_all = verify->add_subcommand("all", "verify every catalog target");

  auto *feasible = app.add_subcommand("feasible", "arithmetically feasible (k,r) for given p, d");
  int fp = 0, fd = 0;
  bool even_r = false;
  feasible->add_option("--p", fp, "prime")->required();
  feasible->add_option("--d", fd, "degree")->required();
  feasible->add_flag("--even-r", even_r, "keep only even replication numbers");
  feasible->add_option("--cap", cap, "candidate cap");
  feasible->add_option("--out", out_file, "write CSV to a file");

  auto *search = app.add_subcommand("search", "base-block searches under a given group");
  std::string kind, group_file;
  int st = 1;
  long long sk = 3;
  search->add_option("kind", kind, "two-coset | subspace | small")->required();
  search->add_option("--group", group_file, "group JSON file")->required();
  search->add_option("--t", st, "subspace dimension (two-coset, subspace)");
  search->add_option("--k", sk, "block size (small)");
  search->add_option("--cap", cap, "candidate cap");
  search->add_option("--out", out_file, "write CSV to a file");

  auto *dump = app.add_subcommand("dump", "print a catalog design (header + one block per line)");
  std::string dump_id;
  auto *d_example = dump->add_subcommand("example", "dump one catalog instance by id");
  d_example->add_option("id", dump_id, "instance id")->required();
  dump->add_option("--out", out_file, "write the dump to a file");

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError &e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) {
      RunReport run;
      if (v_example->parsed())
        run.targets.push_back(verify_target(example_id));
      else if (v_t1->parsed()) {
        if (t1_line < 1 || t1_line > 20) fail(Err::BadInput, "table1 line out of range");
        run.targets.push_back(verify_target("table1-line" + std::to_string(t1_line)));
      } else if (v_t2->parsed()) {
        if (t2_line < 1 || t2_line > 13) fail(Err::BadInput, "table2 line out of range");
        run.targets.push_back(verify_target("table2-line" + std::to_string(t2_line)));
      } else if (v_all->parsed())
        run = verify_all();
      else
        fail(Err::BadInput, "verify needs a target");
      emit(as_json ? run.to_json().dump(2) + "\n" : run.text(), out_file, out);
      return run.all_pass() ? 0 : 1;
    }
    if (feasible->parsed()) {
      std::ostringstream os;
      os << "p,d,k,r,b,notes\n";
      for (const auto &c : param_feasible(fp, fd, even_r, cap))
        os << c.p << ',' << c.d << ',' << c.k << ',' << c.r << ',' << c.b << ',' << c.notes
           << '\n';
      emit(os.str(), out_file, out);
      return 0;
    }
    if (search->parsed()) {
      Group g = group_from_file(group_file);
      std::vector<SearchResult> rs;
      if (kind == "two-coset")
        rs = search_two_coset_blocks(g, st, cap);
      else if (kind == "subspace")
        rs = search_subspace_blocks(g, st, cap);
      else if (kind == "small")
        rs = search_small_blocks(g, sk, cap);
      else
        fail(Err::BadInput, "unknown search kind '" + kind + "'");
      emit(search_csv(rs), out_file, out);
      return 0;
    }
    if (dump->parsed()) {
      if (!d_example->parsed()) fail(Err::BadInput, "dump needs a target");
      ExampleInstance inst = instance_by_id(dump_id);
      Design D = design_from_base_block(inst.g0, inst.base_block);
      DesignParams P = verify_parameters(D);
      emit(dump_design(D, P), out_file, out);
      return 0;
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return e.code == Err::CapExceeded ? 3 : 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace flagdes
