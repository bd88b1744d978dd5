#include "khovanov/knotio.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "khovanov/errors.hpp"

namespace kh {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }
  long long integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<int>::max() - 9) / 10) throw ParseError("integer too large", start);
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == digits) throw ParseError("expected integer", start);
    return neg ? -v : v;
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PdCode parse_pd(std::string_view text) {
  Cursor in(text);
  PdCode pd;
  std::vector<std::size_t> atom_pos;
  while (!in.done()) {
    if (!pd.crossings.empty()) in.expect(';');
    atom_pos.push_back(in.position());
    in.expect('X');
    in.expect('[');
    std::array<int, 4> c{};
    for (int k = 0; k < 4; ++k) {
      if (k > 0) in.expect(',');
      const std::size_t at = in.position();
      const long long v = in.integer();
      if (v < 1) throw ParseError("edge labels must be >= 1", at);
      c[k] = static_cast<int>(v);
    }
    in.expect(']');
    pd.crossings.push_back(c);
  }

  const int n = pd.crossing_count();
  std::map<int, int> count;
  for (const auto& c : pd.crossings) {
    for (int label : c) ++count[label];
  }
  std::string once, more;
  for (auto [label, times] : count) {
    std::string& list = times == 1 ? once : more;
    if (times == 2) continue;
    if (!list.empty()) list += ",";
    list += std::to_string(label);
  }
  if (!once.empty()) throw ParseError("edge labels " + once + " appear once");
  if (!more.empty()) throw ParseError("edge labels " + more + " appear more than twice");
  for (int k = 0; k < n; ++k) {
    for (int label : pd.crossings[k]) {
      if (label > 2 * n) {
        throw ParseError("edge label " + std::to_string(label) + " exceeds 2n = " + std::to_string(2 * n),
                         atom_pos[k]);
      }
    }
  }
  return pd;
}

std::string render_pd(const PdCode& pd) {
  std::string out;
  for (const auto& c : pd.crossings) {
    if (!out.empty()) out += ';';
    out += "X[" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + "," +
           std::to_string(c[3]) + "]";
  }
  return out;
}

BraidWord parse_braid(std::string_view text) {
  Cursor in(text);
  BraidWord braid;
  std::optional<int> declared;
  if (in.peek('s')) {
    in.expect('s');
    in.expect('=');
    const std::size_t at = in.position();
    const long long k = in.integer();
    if (k < 1) throw ParseError("strand count must be positive", at);
    declared = static_cast<int>(k);
    in.expect(':');
  }
  int max_abs = 0;
  while (!in.done()) {
    const std::size_t at = in.position();
    const long long v = in.integer();
    if (v == 0) throw ParseError("braid letters must be nonzero", at);
    const int a = static_cast<int>(v < 0 ? -v : v);
    if (declared && a > *declared - 1) {
      throw ParseError("letter " + std::to_string(v) + " exceeds declared strand count " +
                           std::to_string(*declared),
                       at);
    }
    max_abs = std::max(max_abs, a);
    braid.letters.push_back(static_cast<int>(v));
  }
  braid.strands = declared ? *declared : max_abs + 1;
  return braid;
}

std::string render_braid(const BraidWord& braid) {
  std::string out = "s=" + std::to_string(braid.strands) + ":";
  for (int l : braid.letters) out += " " + std::to_string(l);
  return out;
}

KnotRecord parse_knot_record(std::string_view json_line, std::size_t line_number) {
  const std::string where = "line " + std::to_string(line_number);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(where + ": malformed JSON: " + e.what());
  }
  if (!j.is_object()) throw ParseError(where + ": record is not a JSON object");

  KnotRecord rec;
  auto get_string = [&](const char* key) -> std::optional<std::string> {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) throw ParseError(where + ": field '" + key + "' must be a string");
    return it->get<std::string>();
  };

  auto name = get_string("name");
  if (!name || name->empty()) throw ParseError(where + ": record lacks a nonempty 'name'");
  rec.name = *name;
  const std::string who = where + " (" + rec.name + ")";

  try {
    if (auto pd = get_string("pd")) rec.pd = parse_pd(*pd);
    if (auto braid = get_string("braid")) rec.braid = parse_braid(*braid);
    if (auto alex = get_string("alexander")) rec.alexander = parse_laurent(*alex, 't');
  } catch (const ParseError& e) {
    throw ParseError(who + ": " + e.what());
  }
  if (auto it = j.find("volume"); it != j.end() && !it->is_null()) {
    if (!it->is_number()) throw ParseError(who + ": 'volume' must be a number");
    const double v = it->get<double>();
    if (v < 0) throw ParseError(who + ": 'volume' must be nonnegative");
    rec.volume = v;
  }
  if (auto it = j.find("signature"); it != j.end() && !it->is_null()) {
    if (!it->is_number_integer()) throw ParseError(who + ": 'signature' must be an integer");
    rec.signature = it->get<int>();
  }
  if (auto it = j.find("alternating"); it != j.end() && !it->is_null()) {
    if (!it->is_boolean()) throw ParseError(who + ": 'alternating' must be a boolean");
    rec.alternating = it->get<bool>();
  }
  if (!rec.pd && !rec.braid) throw ParseError(who + ": record has neither 'pd' nor 'braid'");
  return rec;
}

std::vector<KnotRecord> parse_knot_table(std::string_view contents) {
  std::vector<KnotRecord> records;
  std::set<std::string> names;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(start, end - start);
    ++line_number;
    start = end + 1;
    bool blank = true;
    for (char ch : line) blank = blank && std::isspace(static_cast<unsigned char>(ch));
    if (blank) continue;
    KnotRecord rec = parse_knot_record(line, line_number);
    if (!names.insert(rec.name).second) {
      throw ParseError("line " + std::to_string(line_number) + ": duplicate knot name '" + rec.name + "'");
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<KnotRecord> load_knot_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open knot table " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error reading knot table " + path.string());
  return parse_knot_table(buf.str());
}

}  // namespace kh
