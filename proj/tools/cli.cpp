#include "cli.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dycktab/enumerate.hpp"
#include "dycktab/statistics.hpp"
#include "dycktab/verify.hpp"

namespace dycktab::cli {

namespace {

using nlohmann::json;

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string join_set(const std::set<int>& values) {
  return join_ints(std::vector<int>(values.begin(), values.end()));
}

WeightedDyckWord read_input(const std::string& from, const std::string& text) {
  if (from == "word") return parse_word(text);
  if (from == "perm") return tableau_of(parse_permutation(text));
  return from_history(parse_history(text));
}

/// One value per command invocation or one per non-blank stdin line.
std::vector<std::string> gather_inputs(const std::string& positional, bool positional_given,
                                       std::istream& in) {
  if (positional_given && positional != "-") return {positional};
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

// --- the --filter mini-language: comparisons over l, r, s and the shape
// string, joined by "and" (or "&&") ---

struct FilterClause {
  std::string field;
  std::string op;
  std::string text_value;
  int int_value = 0;
};

std::vector<FilterClause> parse_filter(const std::string& expr) {
  std::istringstream in(expr);
  std::vector<std::string> clause_texts(1);
  std::string token;
  while (in >> token) {
    if (token == "and" || token == "&&") {
      if (clause_texts.back().empty()) throw std::invalid_argument("empty filter clause");
      clause_texts.emplace_back();
    } else {
      clause_texts.back() += token;
    }
  }

  static const std::vector<std::string> ops = {"==", "!=", "<=", ">=", "<", ">"};
  std::vector<FilterClause> clauses;
  for (const std::string& text : clause_texts) {
    if (text.empty()) throw std::invalid_argument("empty filter clause");
    FilterClause clause;
    size_t op_at = std::string::npos;
    for (const std::string& op : ops) {
      const size_t at = text.find(op);
      if (at != std::string::npos && at < op_at) {
        op_at = at;
        clause.op = op;
      }
    }
    if (op_at == std::string::npos)
      throw std::invalid_argument("no comparison in filter clause '" + text + "'");
    clause.field = text.substr(0, op_at);
    clause.text_value = text.substr(op_at + clause.op.size());
    if (clause.field == "shape") {
      if (clause.op != "==" && clause.op != "!=")
        throw std::invalid_argument("shape supports only == and !=");
    } else if (clause.field == "l" || clause.field == "r" || clause.field == "s") {
      try {
        clause.int_value = std::stoi(clause.text_value);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad integer in filter clause '" + text + "'");
      }
    } else {
      throw std::invalid_argument("unknown filter field '" + clause.field + "'");
    }
    clauses.push_back(std::move(clause));
  }
  return clauses;
}

std::function<bool(const WeightedDyckWord&)> compile_filter(const std::string& expr) {
  const std::vector<FilterClause> clauses = parse_filter(expr);
  return [clauses](const WeightedDyckWord& w) {
    const WeightExponents e = weight_exponents(w);
    for (const FilterClause& clause : clauses) {
      if (clause.field == "shape") {
        const bool equal = shape_string(w) == clause.text_value;
        if (clause.op == "==" ? !equal : equal) return false;
        continue;
      }
      const int lhs = clause.field == "l" ? e.l : clause.field == "r" ? e.r : e.s;
      const int rhs = clause.int_value;
      bool ok = true;
      if (clause.op == "==") ok = lhs == rhs;
      else if (clause.op == "!=") ok = lhs != rhs;
      else if (clause.op == "<=") ok = lhs <= rhs;
      else if (clause.op == ">=") ok = lhs >= rhs;
      else if (clause.op == "<") ok = lhs < rhs;
      else ok = lhs > rhs;
      if (!ok) return false;
    }
    return true;
  };
}

// --- per-command output ---

void print_convert(const WeightedDyckWord& w, const std::string& to, bool records,
                   std::ostream& out) {
  const std::string word = serialize_word(w);
  const std::string perm = serialize_permutation(permutation_of(w));
  const std::string history = serialize_history(history_of(w));
  if (records) {
    out << json{{"word", word}, {"perm", perm}, {"history", history}}.dump() << '\n';
    return;
  }
  if (to == "word") out << word << '\n';
  else if (to == "perm") out << perm << '\n';
  else if (to == "history") out << history << '\n';
  else
    out << "word: " << word << '\n'
        << "perm: " << perm << '\n'
        << "history: " << history << '\n';
}

void print_stats(const WeightedDyckWord& w, bool records, std::ostream& out) {
  const TableauView view = tableau_view(w);
  const BoxStatistics boxes = box_statistics(w);
  const HistoryTable history = history_of(w);
  const TltStats tlt = tlt_statistics(history);
  std::vector<int> heights, dot_heights;
  for (const ColumnView& col : view.columns) {
    heights.push_back(col.height);
    dot_heights.push_back(col.dot_height);
  }
  if (records) {
    json record{{"word", serialize_word(w)},
                {"perm", serialize_permutation(permutation_of(w))},
                {"history", serialize_history(history)},
                {"size", w.size()},
                {"shape", shape_string(w)},
                {"heights", heights},
                {"dot_heights", dot_heights},
                {"ribbons", boxes.ribbons},
                {"shadow", boxes.shadow},
                {"clear", boxes.clear},
                {"per_column_shadow", boxes.per_column_shadow},
                {"per_column_clear", boxes.per_column_clear},
                {"tlt_ribbons", tlt.ribbons},
                {"tlt_left_sons", tlt.left_sons},
                {"tlt_crossing_boxes", tlt.crossing_boxes}};
    if (w.size() > 0) {
      const WeightExponents e = weight_exponents(w);
      record["l"] = e.l;
      record["r"] = e.r;
      record["s"] = e.s;
    }
    out << record.dump() << '\n';
    return;
  }
  out << "word: " << serialize_word(w) << '\n'
      << "perm: " << serialize_permutation(permutation_of(w)) << '\n'
      << "history: " << serialize_history(history) << '\n'
      << "size: " << w.size() << '\n'
      << "shape: " << shape_string(w) << '\n'
      << "heights: " << join_ints(heights) << '\n'
      << "dot_heights: " << join_ints(dot_heights) << '\n'
      << "ribbons: " << boxes.ribbons << '\n'
      << "shadow: " << boxes.shadow << '\n'
      << "clear: " << boxes.clear << '\n'
      << "per_column_shadow: " << join_ints(boxes.per_column_shadow) << '\n'
      << "per_column_clear: " << join_ints(boxes.per_column_clear) << '\n'
      << "tlt_ribbons: " << tlt.ribbons << '\n'
      << "tlt_left_sons: " << tlt.left_sons << '\n'
      << "tlt_crossing_boxes: " << tlt.crossing_boxes << '\n';
  if (w.size() > 0) {
    const WeightExponents e = weight_exponents(w);
    out << "l: " << e.l << '\n' << "r: " << e.r << '\n' << "s: " << e.s << '\n';
  }
}

void print_extrema(const WeightedDyckWord& w, bool records, std::ostream& out) {
  const ExtremaReport report = extrema(w);
  if (records) {
    out << json{{"rl_minima", report.rl_minima},
                {"lr_maxima", report.lr_maxima},
                {"rl_maxima", report.rl_maxima},
                {"lr_minima", report.lr_minima},
                {"position_of_1", report.position_of_1},
                {"position_of_n", report.position_of_n}}
               .dump()
        << '\n';
    return;
  }
  out << "rl_minima: " << join_set(report.rl_minima) << '\n'
      << "lr_maxima: " << join_set(report.lr_maxima) << '\n'
      << "rl_maxima: " << join_set(report.rl_maxima) << '\n'
      << "lr_minima: " << join_set(report.lr_minima) << '\n'
      << "position_of_1: " << report.position_of_1 << '\n'
      << "position_of_n: " << report.position_of_n << '\n';
}

json report_record(const VerificationReport& report) {
  return json{{"id", report.id},         {"description", report.description},
              {"max_n", report.max_n},   {"cases", report.cases},
              {"passed", report.passed()}, {"failures", report.failures},
              {"notes", report.notes}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Dyck tableaux as weighted Dyck words: insertion, bijections, statistics"};
  app.require_subcommand(1);

  std::string from = "word", to = "all", format = "text", filter_expr, word_text, input;
  int at = 0, n = 0, max_n = 0, workers = 1, max_size = 9;
  bool verify_everything = false;
  std::vector<std::string> proposition_args;

  const auto from_check = CLI::IsMember({"word", "perm", "history"});
  const auto format_check = CLI::IsMember({"text", "records"});

  auto* convert = app.add_subcommand("convert", "Convert between word, perm and history forms");
  convert->add_option("--from", from, "input form")->required()->check(from_check);
  convert->add_option("--to", to, "output form, or 'all' for labeled lines")
      ->check(CLI::IsMember({"word", "perm", "history", "all"}));
  convert->add_option("--format", format, "text or records")->check(format_check);
  auto* convert_input = convert->add_option("input", input, "value; '-' or absent reads stdin");

  auto* insert_cmd = app.add_subcommand("insert", "Insert a dot at a basement slot");
  insert_cmd->add_option("--word", word_text, "weighted Dyck word")->required();
  insert_cmd->add_option("--at", at, "0-based basement slot")->required();

  auto* uninsert = app.add_subcommand("uninsert", "Undo the last insertion");
  uninsert->add_option("--word", word_text, "weighted Dyck word")->required();
  uninsert->add_option("--format", format, "text or records")->check(format_check);

  auto* enumerate = app.add_subcommand("enumerate", "Stream all words of one size");
  enumerate->add_option("--n", n, "tableau size")->required()->check(CLI::NonNegativeNumber);

  auto* stats = app.add_subcommand("stats", "Full statistics report for one tableau");
  stats->add_option("--from", from, "input form")->required()->check(from_check);
  stats->add_option("--format", format, "text or records")->check(format_check);
  auto* stats_input = stats->add_option("input", input, "value; '-' or absent reads stdin");

  auto* extrema_cmd = app.add_subcommand("extrema", "Running extrema read off the tableau");
  extrema_cmd->add_option("--from", from, "input form")->required()->check(from_check);
  extrema_cmd->add_option("--format", format, "text or records")->check(format_check);
  auto* extrema_input = extrema_cmd->add_option("input", input, "value; '-' or absent reads stdin");

  auto* polynomial = app.add_subcommand("polynomial", "Weight polynomial over all tableaux");
  polynomial->add_option("--n", n, "tableau size")->required();
  polynomial->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  polynomial->add_option("--filter", filter_expr,
                         "restrict to tableaux matching e.g. 'l==1 and s>=2' or 'shape==DDUU'");
  polynomial->add_option("--max-size", max_size, "enumeration guard")->check(CLI::PositiveNumber);
  polynomial->add_option("--format", format, "text or records")->check(format_check);

  auto* render = app.add_subcommand("render", "ASCII drawing of a tableau");
  render->add_option("--from", from, "input form")->required()->check(from_check);
  auto* render_input = render->add_option("input", input, "value; '-' or absent reads stdin");

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive proposition checks");
  verify_cmd->add_flag("--all", verify_everything, "run every registered proposition");
  verify_cmd->add_option("props", proposition_args, "proposition ids to run");
  verify_cmd->add_option("--max-n", max_n, "exhaustive bound (default: per proposition)");
  verify_cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", format, "text or records")->check(format_check);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const bool records = format == "records";
  try {
    if (convert->parsed()) {
      for (const std::string& text : gather_inputs(input, !convert_input->empty(), in))
        print_convert(read_input(from, text), to, records, out);
    } else if (insert_cmd->parsed()) {
      out << serialize_word(insert(parse_word(word_text), at)) << '\n';
    } else if (uninsert->parsed()) {
      const InverseInsertResult result = inverse_insert(parse_word(word_text));
      if (records)
        out << json{{"word", serialize_word(result.word)}, {"at", result.at}}.dump() << '\n';
      else
        out << serialize_word(result.word) << '\n' << result.at << '\n';
    } else if (enumerate->parsed()) {
      for (const WeightedDyckWord& w : WordRange(n)) out << serialize_word(w) << '\n';
    } else if (stats->parsed()) {
      bool first = true;
      for (const std::string& text : gather_inputs(input, !stats_input->empty(), in)) {
        if (!first && !records) out << '\n';
        print_stats(read_input(from, text), records, out);
        first = false;
      }
    } else if (extrema_cmd->parsed()) {
      bool first = true;
      for (const std::string& text : gather_inputs(input, !extrema_input->empty(), in)) {
        if (!first && !records) out << '\n';
        print_extrema(read_input(from, text), records, out);
        first = false;
      }
    } else if (polynomial->parsed()) {
      PolynomialOptions options;
      options.workers = workers;
      options.max_size = max_size;
      if (!filter_expr.empty()) {
        try {
          options.filter = compile_filter(filter_expr);
        } catch (const std::invalid_argument& e) {
          err << "usage error: " << e.what() << '\n';
          return 2;
        }
      }
      const GenPolynomial poly = partition_polynomial(n, options);
      if (records) {
        for (const auto& [triple, coeff] : poly.terms)
          out << json{{"l", triple[0]}, {"r", triple[1]}, {"s", triple[2]}, {"coeff", coeff}}
                     .dump()
              << '\n';
      } else {
        out << poly.to_lines();
      }
    } else if (render->parsed()) {
      bool first = true;
      for (const std::string& text : gather_inputs(input, !render_input->empty(), in)) {
        if (!first) out << '\n';
        out << render_ascii(read_input(from, text));
        first = false;
      }
    } else if (verify_cmd->parsed()) {
      if (!verify_everything && proposition_args.empty()) {
        err << "usage error: pass --all or at least one proposition id\n";
        return 2;
      }
      std::vector<VerificationReport> reports;
      if (verify_everything) {
        reports = verify_all(max_n, workers);
      } else {
        for (const std::string& id : proposition_args) reports.push_back(verify(id, max_n));
      }
      bool all_passed = true;
      for (const VerificationReport& report : reports) {
        all_passed = all_passed && report.passed();
        if (records)
          out << report_record(report).dump() << '\n';
        else
          out << report.to_text() << '\n';
      }
      return all_passed ? 0 : 3;
    }
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace dycktab::cli
