#include "graphsym/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "graphsym/errors.hpp"

namespace graphsym {

using nlohmann::json;

namespace {

bool is_numeric(const TaskSpec& t) {
  return t.answer_kind == AnswerKind::kInteger || t.answer_kind == AnswerKind::kFloat;
}

template <class F>
std::optional<double> guarded(F f) {
  try {
    return f();
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string fmt(double v, const char* spec = "%.2f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : "-"; }

std::string percent_cell(const MeanStd& m) {
  std::string s = fmt(100.0 * m.mean, "%.1f");
  if (m.std) s += "±" + fmt(100.0 * *m.std, "%.1f");
  return s;
}

std::size_t display_width(const std::string& s) {
  // Counts UTF-8 code points so "±" lines up.
  std::size_t w = 0;
  for (unsigned char c : s) w += (c & 0xC0) != 0x80;
  return w;
}

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], display_width(row[i]));
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      const std::size_t pad = width[i] - display_width(row[i]);
      if (i == 0) {
        line += row[i] + std::string(pad, ' ');
      } else {
        line += std::string(pad, ' ') + row[i];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      const bool quote = row[i].find_first_of(",\"") != std::string::npos;
      if (quote) {
        out += "\"";
        for (char c : row[i]) out += c == '"' ? std::string("\"\"") : std::string(1, c);
        out += "\"";
      } else {
        out += row[i];
      }
    }
    out += "\n";
  }
  return out;
}

std::vector<std::string> task_order(const MetricReport& r) {
  std::set<std::string> present;
  for (const auto& c : r.cells) present.insert(c.task);
  std::vector<std::string> out;
  for (Difficulty d : {Difficulty::kEasy, Difficulty::kMedium, Difficulty::kHard,
                       Difficulty::kChallenging}) {
    for (const auto& t : task_catalog()) {
      if (t.difficulty == d && present.count(t.id)) out.push_back(t.id);
    }
  }
  return out;
}

const CellReport* find_cell(const MetricReport& r, const std::string& model,
                            const std::string& task, const std::string& enc) {
  for (const auto& c : r.cells) {
    if (c.model == model && c.task == task && c.encoding == enc) return &c;
  }
  return nullptr;
}

std::vector<std::vector<std::string>> accuracy_rows(const MetricReport& r) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"task", "difficulty"};
  for (const auto& m : r.models) {
    for (const auto& e : r.encodings) head.push_back(m + ":" + e);
  }
  rows.push_back(head);
  for (const auto& task : task_order(r)) {
    std::vector<std::string> row{task, std::string(to_string(find_task(task).difficulty))};
    for (const auto& m : r.models) {
      for (const auto& e : r.encodings) {
        const CellReport* c = find_cell(r, m, task, e);
        row.push_back(c ? percent_cell(c->accuracy) : "-");
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::vector<std::string>> error_rows(const MetricReport& r) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"task"};
  const char* metrics[] = {"nRMSE_std", "nRMSE_range", "sMAPE_0-100", "RelMAE",
                           "parse_fail"};
  for (const char* metric : metrics) {
    for (const auto& m : r.models) head.push_back(std::string(metric) + ":" + m);
  }
  rows.push_back(head);
  for (const auto& task : task_order(r)) {
    if (!is_numeric(find_task(task))) continue;
    std::vector<std::string> row{task};
    for (int k = 0; k < 5; ++k) {
      for (const auto& m : r.models) {
        const CellReport* c = find_cell(r, m, task, r.baseline);
        if (!c) {
          row.push_back("-");
          continue;
        }
        switch (k) {
          case 0: row.push_back(fmt_opt(c->nrmse_std)); break;
          case 1: row.push_back(fmt_opt(c->nrmse_range)); break;
          case 2: row.push_back(fmt_opt(c->smape_0_100)); break;
          case 3: row.push_back(fmt_opt(c->relmae)); break;
          default: row.push_back(fmt(100.0 * c->parse_failure_rate, "%.1f%%")); break;
        }
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

MetricReport score_records(const std::vector<EvalRecord>& records,
                           const EncodingSpec& baseline) {
  MetricReport report;
  report.baseline = baseline.id();

  using Key = std::tuple<std::string, std::string, std::string>;
  std::map<Key, std::vector<const EvalRecord*>> groups;
  std::map<std::string, std::map<std::string, double>> truths_by_task;
  std::set<std::string> models;
  std::set<std::string> encodings;
  for (const auto& r : records) {
    groups[{r.model, r.task, r.encoding.id()}].push_back(&r);
    if (r.truth.is_number()) truths_by_task[r.task][r.graph_id] = r.truth.get<double>();
    models.insert(r.model);
    encodings.insert(r.encoding.id());
  }
  report.models.assign(models.begin(), models.end());
  if (encodings.count(report.baseline)) report.encodings.push_back(report.baseline);
  for (const auto& e : encodings) {
    if (e != report.baseline) report.encodings.push_back(e);
  }

  for (const auto& [key, group] : groups) {
    const auto& [model, task_id, enc] = key;
    const TaskSpec& task = find_task(task_id);
    CellReport c;
    c.model = model;
    c.task = task_id;
    c.encoding = enc;
    c.difficulty = task.difficulty;
    c.records = group.size();

    std::map<std::string, std::vector<Verdict>> by_seed;
    std::size_t unparsed = 0;
    for (const EvalRecord* r : group) {
      const std::string seed =
          r->relabel_seed ? std::to_string(*r->relabel_seed) : std::string("identity");
      by_seed[seed].push_back(r->verdict);
      unparsed += r->verdict == Verdict::kUnparsed;
    }
    std::vector<double> per_seed;
    for (const auto& [seed, verdicts] : by_seed) per_seed.push_back(accuracy(verdicts));
    c.accuracy = mean_std(per_seed);
    c.parse_failure_rate = static_cast<double>(unparsed) / static_cast<double>(group.size());

    if (is_numeric(task)) {
      PairedSeries s;
      std::map<std::string, std::vector<std::optional<double>>> outputs;
      for (const EvalRecord* r : group) {
        if (!r->truth.is_number()) continue;
        const bool ok = r->parsed && r->parsed->is_number();
        s.truths.push_back(r->truth.get<double>());
        s.predictions.push_back(ok ? r->parsed->get<double>() : 0.0);
        s.parsed.push_back(ok);
        outputs[r->graph_id].push_back(ok ? std::optional<double>(r->parsed->get<double>())
                                          : std::nullopt);
      }
      c.nrmse_range = guarded([&] { return nrmse(s, NrmseNorm::kRange); });
      c.nrmse_std = guarded([&] { return nrmse(s, NrmseNorm::kStd); });
      c.smape_0_100 = guarded([&] { return smape(s, SmapeScale::k0To100); });
      c.relmae = guarded([&] { return relmae(s); });
      std::vector<double> task_truths;
      for (const auto& [g, v] : truths_by_task[task_id]) task_truths.push_back(v);
      std::vector<std::vector<std::optional<double>>> per_example;
      for (auto& [g, o] : outputs) per_example.push_back(std::move(o));
      try {
        const SpanResult span = output_span(per_example, answer_range(task_truths));
        c.span = span.value;
        c.span_excluded = span.excluded;
      } catch (const Error&) {
      }
    }
    report.cells.push_back(std::move(c));
  }

  for (auto& c : report.cells) {
    if (const CellReport* b = find_cell(report, c.model, c.task, report.baseline)) {
      c.delta_vs_baseline = c.accuracy.mean - b->accuracy.mean;
    }
  }

  std::vector<ErrorCell> errors;
  for (const auto& c : report.cells) {
    if (c.encoding != report.baseline) continue;
    if (c.smape_0_100) errors.push_back({c.task, c.model, "smape_0_100", *c.smape_0_100});
    if (c.relmae) errors.push_back({c.task, c.model, "relmae", *c.relmae});
  }
  if (report.models.size() >= 2) {
    try {
      report.global_error = global_normalized_error(errors).scores;
    } catch (const Error&) {
    }
  }
  return report;
}

json cell_to_json(const CellReport& c) {
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(); };
  return {{"model", c.model},
          {"task", c.task},
          {"encoding", c.encoding},
          {"difficulty", std::string(to_string(c.difficulty))},
          {"records", c.records},
          {"accuracy_mean", c.accuracy.mean},
          {"accuracy_std", opt(c.accuracy.std)},
          {"seeds", c.accuracy.count},
          {"parse_failure_rate", c.parse_failure_rate},
          {"nrmse_range", opt(c.nrmse_range)},
          {"nrmse_std", opt(c.nrmse_std)},
          {"smape_0_100", opt(c.smape_0_100)},
          {"relmae", opt(c.relmae)},
          {"span", opt(c.span)},
          {"span_excluded", c.span_excluded},
          {"delta_vs_baseline", opt(c.delta_vs_baseline)}};
}

std::string accuracy_table_text(const MetricReport& r) { return aligned(accuracy_rows(r)); }
std::string accuracy_table_csv(const MetricReport& r) { return csv(accuracy_rows(r)); }
std::string error_table_text(const MetricReport& r) { return aligned(error_rows(r)); }
std::string error_table_csv(const MetricReport& r) { return csv(error_rows(r)); }

void write_report(const MetricReport& r, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const std::string& text) {
    std::ofstream out(dir / name, std::ios::trunc | std::ios::binary);
    if (!out) throw ConfigError("cannot write " + (dir / name).string());
    out << text;
  };
  std::string cells;
  for (const auto& c : r.cells) cells += cell_to_json(c).dump() + "\n";
  write("cells.jsonl", cells);
  write("accuracy.txt", accuracy_table_text(r));
  write("accuracy.csv", accuracy_table_csv(r));
  write("errors.txt", error_table_text(r));
  write("errors.csv", error_table_csv(r));
  json global = json::object();
  for (const auto& [m, v] : r.global_error) global[m] = v;
  write("global_error.json", json{{"baseline", r.baseline}, {"scores", global}}.dump(2) + "\n");
}

}  // namespace graphsym
