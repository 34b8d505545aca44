// Copyright 2026 The pdc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pdc/report.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdc/apex.hpp"
#include "pdc/builders.hpp"
#include "pdc/errors.hpp"
#include "pdc/gadget.hpp"
#include "pdc/instance.hpp"
#include "pdc/matchsum.hpp"
#include "pdc/oracle.hpp"
#include "pdc/reduction.hpp"
#include "pdc/threads.hpp"

namespace pdc {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open instance file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Distinguished faces for an operation: --faces overrides the instance's
// own list; "outer" names the longest face.
std::vector<std::string> pick_faces(const ApexInstance& inst,
                                    const std::vector<std::string>& flag) {
  std::vector<std::string> ids = flag.empty() ? inst.distinguished_faces : flag;
  for (auto& id : ids) {
    if (id == "outer") id = outer_face_id(inst.planar.faces());
  }
  return ids;
}

json spectrum_json(const std::vector<Integer>& spectrum) {
  json arr = json::array();
  for (const auto& c : spectrum) arr.push_back(c.get_str());
  return arr;
}

struct CliContext {
  std::string instance_path;
  std::string instance_bytes;
  bool report_envelope = false;
};

void emit(const CliContext& ctx, const std::string& op, json result, std::ostream& out) {
  if (ctx.report_envelope) {
    json envelope;
    envelope["op"] = op;
    envelope["digest"] = content_digest(ctx.instance_bytes);
    envelope["result"] = std::move(result);
    out << envelope.dump() << "\n";
  } else {
    out << result.dump() << "\n";
  }
}

std::vector<Integer> brute_spectrum(const PlaneGraph& g,
                                    const std::vector<std::string>& face_ids) {
  auto faces = resolve_face_ids(g, face_ids);
  auto allowed = face_vertex_set(g, faces);
  std::vector<bool> is_allowed(g.vertex_count(), false);
  for (VertexId v : allowed) is_allowed[v] = true;
  std::vector<VertexId> banned;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!is_allowed[v]) banned.push_back(v);
  }
  std::vector<Integer> out;
  for (int k = 0; k <= g.vertex_count(); ++k) out.push_back(brute_defects(g, k, banned));
  return out;
}

}  // namespace

std::string content_digest(const std::string& bytes) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", h);
  return std::string(buf);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact matching counts on plane graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  bool report_envelope = false;
  app.add_option("--threads", threads, "worker threads (default: PDC_THREADS or all cores)");
  app.add_flag("--report", report_envelope, "wrap results in an op/digest envelope");

  std::string file;
  std::vector<std::string> faces_flag;
  bool spectrum_flag = false;
  bool trace_flag = false;
  std::string oracle_name = "brute";
  std::string verify_op;
  int gadget_arity = 1;
  std::string gadget_parity = "even";
  std::string emit_path;
  int bench_grid = 20;
  int bench_smax = 5;
  std::vector<int> bench_pm_sizes{200, 400, 800};

  auto* perfmatch = app.add_subcommand("perfmatch", "perfect-matching sum of a plane instance");
  perfmatch->add_option("file", file)->required();

  auto* matchsum = app.add_subcommand("matchsum", "matching sum over unmatched-vertex weights");
  matchsum->add_option("file", file)->required();
  matchsum->add_option("--faces", faces_flag, "distinguished faces (ids or \"outer\")");

  auto* defects = app.add_subcommand("count-defects", "matchings with defects on the faces");
  defects->add_option("file", file)->required();
  defects->add_option("--faces", faces_flag, "distinguished faces (ids or \"outer\")");
  defects->add_flag("--spectrum", spectrum_flag, "per-defect-count spectrum");

  auto* apex = app.add_subcommand("apex", "perfect-matching sum of a k-apex instance");
  apex->add_option("file", file)->required();

  auto* reduce = app.add_subcommand("reduce", "run a counting reduction");
  reduce->require_subcommand(1);
  auto* chain = reduce->add_subcommand("apex-to-defect", "apex count via defect-count oracle");
  chain->add_option("file", file)->required();
  chain->add_option("--oracle", oracle_name, "defect oracle (brute)");
  chain->add_flag("--trace", trace_flag, "include per-stage terms");

  auto* gadget = app.add_subcommand("gadget", "parity gadget tools");
  gadget->require_subcommand(1);
  auto* gadget_emit = gadget->add_subcommand("emit", "write a gadget as an instance");
  gadget_emit->add_option("--arity", gadget_arity)->required();
  gadget_emit->add_option("--parity", gadget_parity)->check(CLI::IsMember({"even", "odd"}));
  gadget_emit->add_option("-o,--output", emit_path, "write to file instead of stdout");
  auto* gadget_check = gadget->add_subcommand("check", "signature table of a gadget");
  gadget_check->add_option("--arity", gadget_arity)->required();
  gadget_check->add_option("--parity", gadget_parity)->check(CLI::IsMember({"even", "odd"}));

  auto* verify = app.add_subcommand("verify", "compare an algorithm against brute force");
  verify->add_option("file", file)->required();
  verify->add_option("--op", verify_op)
      ->check(CLI::IsMember({"perfmatch", "matchsum", "spectrum", "apex"}));
  verify->add_option("--faces", faces_flag, "distinguished faces (ids or \"outer\")");

  auto* bench = app.add_subcommand("bench", "timing probes");
  bench->add_option("--grid", bench_grid, "grid side for the face-count probe");
  bench->add_option("--smax", bench_smax, "largest distinguished-face count");
  bench->add_option("--pm-sizes", bench_pm_sizes, "grid vertex counts for the cubic probe");

  std::vector<std::string> argv_store{"pdc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  if (threads == 0) {
    if (const char* env = std::getenv("PDC_THREADS")) threads = std::atoi(env);
  }
  set_thread_budget(threads);

  CliContext ctx;
  ctx.report_envelope = report_envelope;
  ctx.instance_path = file;

  auto started = Clock::now();
  try {
    ApexInstance inst;
    if (!file.empty()) {
      ctx.instance_bytes = read_file(file);
      inst = instance_from_json(ctx.instance_bytes);
    }

    if (perfmatch->parsed()) {
      if (inst.apex_count > 0) throw ValidationError("perfmatch expects a plain plane instance");
      json j;
      j["perfmatch"] = rational_to_string(perfmatch_planar(inst.planar));
      emit(ctx, "perfmatch", j, out);
    } else if (matchsum->parsed()) {
      if (inst.apex_count > 0) throw ValidationError("matchsum expects a plain plane instance");
      json j;
      j["matchsum"] = rational_to_string(matchsum_faces(inst.planar, pick_faces(inst, faces_flag)));
      emit(ctx, "matchsum", j, out);
    } else if (defects->parsed()) {
      if (inst.apex_count > 0) throw ValidationError("count-defects expects a plain plane instance");
      auto ids = pick_faces(inst, faces_flag);
      json j;
      if (spectrum_flag) {
        j["spectrum"] = spectrum_json(defect_spectrum(inst.planar, ids));
      } else {
        j["count"] = count_defects_on_faces_total(inst.planar, ids).get_str();
      }
      emit(ctx, "count-defects", j, out);
    } else if (apex->parsed()) {
      ApexSolveStats stats;
      Rational value = apex_perfmatch(inst, &stats);
      json j;
      j["perfmatch"] = rational_to_string(value);
      j["k"] = stats.k;
      j["s"] = stats.s;
      j["classes"] = stats.classes;
      j["grid_evals"] = stats.grid_evals;
      emit(ctx, "apex", j, out);
    } else if (chain->parsed()) {
      if (oracle_name != "brute") throw ValidationError("unknown oracle \"" + oracle_name + "\"");
      OracleTranscript inner, outer;
      BruteDefectOracle defect_oracle(&inner);
      ReducedRestrDefectOracle restr(defect_oracle, &outer);
      InclusionExclusionTrace trace;
      Integer count = apex_to_restricted(inst, restr, trace_flag ? &trace : nullptr);
      auto inner_audit = audit(inner);
      auto outer_audit = audit(outer);
      json j;
      j["count"] = count.get_str();
      j["k"] = inst.apex_count;
      j["restricted_queries"] = outer_audit.query_count;
      j["defect_queries"] = inner_audit.query_count;
      j["max_parameter"] = inner_audit.max_parameter;
      if (trace_flag) {
        json terms = json::array();
        for (const auto& term : trace.terms) {
          terms.push_back({{"avoided_colors", term.subset}, {"value", term.value.get_str()}});
        }
        j["terms"] = std::move(terms);
      }
      emit(ctx, "reduce", j, out);
    } else if (gadget_emit->parsed()) {
      const ParityGadget& g = build_parity_gadget(gadget_arity, gadget_parity == "odd" ? 1 : 0);
      // Externals become vertices 0..t-1 so instances can reference them.
      std::vector<VertexId> new_of_old(g.graph.vertex_count(), -1);
      int next = 0;
      for (VertexId u : g.externals) new_of_old[u] = next++;
      for (VertexId v = 0; v < g.graph.vertex_count(); ++v) {
        if (new_of_old[v] < 0) new_of_old[v] = next++;
      }
      ApexInstance ginst;
      ginst.planar = g.graph.relabel(new_of_old);
      std::string text = instance_to_json(ginst);
      if (emit_path.empty()) {
        out << text;
      } else {
        std::ofstream f(emit_path, std::ios::binary);
        if (!f) throw ValidationError("cannot write \"" + emit_path + "\"");
        f << text;
        err << "wrote " << emit_path << "\n";
      }
    } else if (gadget_check->parsed()) {
      const ParityGadget& g = build_parity_gadget(gadget_arity, gadget_parity == "odd" ? 1 : 0);
      auto table = signature_graded_lex(signature(g), gadget_arity);
      json arr = json::array();
      for (const auto& v : table) arr.push_back(v.get_si());
      json j;
      j["signature"] = std::move(arr);
      emit(ctx, "gadget-check", j, out);
    } else if (verify->parsed()) {
      std::string op = verify_op;
      if (op.empty()) op = inst.apex_count > 0 ? "apex" : "perfmatch";
      json j;
      j["op"] = op;
      if (op == "perfmatch") {
        Rational fast = perfmatch_planar(inst.planar);
        Rational slow = brute_perfmatch(inst.planar);
        j["fast"] = rational_to_string(fast);
        j["oracle"] = rational_to_string(slow);
        j["agree"] = fast == slow;
      } else if (op == "matchsum") {
        Rational fast = matchsum_faces(inst.planar, pick_faces(inst, faces_flag));
        Rational slow = brute_matchsum(inst.planar);
        j["fast"] = rational_to_string(fast);
        j["oracle"] = rational_to_string(slow);
        j["agree"] = fast == slow;
      } else if (op == "spectrum") {
        auto ids = pick_faces(inst, faces_flag);
        auto fast = defect_spectrum(inst.planar, ids);
        auto slow = brute_spectrum(inst.planar, ids);
        j["fast"] = spectrum_json(fast);
        j["oracle"] = spectrum_json(slow);
        j["agree"] = fast == slow;
      } else {
        Rational fast = apex_perfmatch(inst);
        Rational slow = brute_perfmatch_apex(inst);
        j["fast"] = rational_to_string(fast);
        j["oracle"] = rational_to_string(slow);
        j["agree"] = fast == slow;
      }
      emit(ctx, "verify", j, out);
      if (!j["agree"].get<bool>()) {
        err << "verify: MISMATCH\n";
        return 2;
      }
    } else if (bench->parsed()) {
      json j;
      json ms_rows = json::array();
      {
        PlaneGraph grid = make_grid(bench_grid, bench_grid);
        auto faces = grid.faces();
        // Interior quads, spread across the face list.
        std::vector<std::string> quads;
        for (const auto& f : faces) {
          if (f.walk.size() == 4) quads.push_back(f.id);
        }
        for (int s = 1; s <= bench_smax && s <= static_cast<int>(quads.size()); ++s) {
          std::vector<std::string> ids;
          for (int i = 0; i < s; ++i) ids.push_back(quads[(i * quads.size()) / s]);
          auto t0 = Clock::now();
          Integer count = count_defects_on_faces_total(grid, ids);
          long long ms = ms_since(t0);
          ms_rows.push_back({{"n", bench_grid * bench_grid}, {"s", s}, {"ms", ms},
                             {"count", count.get_str()}});
        }
      }
      j["matchsum"] = std::move(ms_rows);
      json pm_rows = json::array();
      for (int target : bench_pm_sizes) {
        int rows = 1;
        while ((rows + 1) * (rows + 1) <= target) ++rows;
        int cols = target / rows;
        PlaneGraph grid = make_grid(rows, cols);
        auto t0 = Clock::now();
        Rational value = perfmatch_planar(grid);
        long long ms = ms_since(t0);
        pm_rows.push_back({{"rows", rows}, {"cols", cols}, {"vertices", rows * cols},
                           {"ms", ms}, {"digits", value.get_num().get_str().size()}});
      }
      j["perfmatch"] = std::move(pm_rows);
      out << j.dump() << "\n";
    }
    err << app.get_subcommands().front()->get_name() << ": " << ms_since(started) << " ms\n";
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pdc
