#include "kmroots/cache.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "kmroots/error.hpp"

namespace kmroots {

namespace {

[[noreturn]] void corrupt(const std::string& why) { throw Error(ErrorKind::CorruptCache, why); }

std::string expect_key(std::istream& in, const std::string& key) {
  std::string line;
  if (!std::getline(in, line)) corrupt("missing '" + key + "' line");
  if (line.rfind(key + " ", 0) != 0) corrupt("expected '" + key + "', got '" + line + "'");
  return line.substr(key.size() + 1);
}

std::string rows_text(const CartanMatrix& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(a(i, j));
    }
  }
  return s;
}

std::string q_text(const Symmetrizer& q) {
  std::string s;
  for (std::size_t i = 0; i < q.q.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(q.q[i]);
  }
  return s;
}

}  // namespace

void write_table(std::ostream& out, const MultiplicityTable& table) {
  out << "kmroots-multiplicity-cache\n";
  out << "format " << kCacheFormatVersion << "\n";
  out << "matrix " << table.id() << "\n";
  out << "rows " << rows_text(table.matrix()) << "\n";
  out << "q " << q_text(table.symmetrizer()) << "\n";
  out << "max_height " << table.max_height() << "\n";
  out << "degenerate " << table.degenerate_count() << "\n";
  const auto entries = table.sorted_entries();
  out << "entries " << entries.size() << "\n";
  for (const auto& [v, e] : entries) {
    for (auto c : v.coeffs()) out << c << ' ';
    out << e.mult.get_str() << ' ' << e.c.get_num().get_str() << ' ' << e.c.get_den().get_str() << '\n';
  }
}

MultiplicityTable read_table(std::istream& in, const CartanMatrix& a, const Symmetrizer& q) {
  std::string line;
  if (!std::getline(in, line) || line != "kmroots-multiplicity-cache") corrupt("bad magic line");
  if (expect_key(in, "format") != std::to_string(kCacheFormatVersion)) corrupt("unsupported format version");
  MultiplicityTable table(a, q);
  if (expect_key(in, "matrix") != table.id()) corrupt("matrix id does not match " + table.id());
  if (expect_key(in, "rows") != rows_text(a)) corrupt("matrix rows do not match");
  if (expect_key(in, "q") != q_text(q)) corrupt("symmetrizer does not match");
  int max_height = 0;
  std::size_t degenerate = 0, count = 0;
  try {
    max_height = std::stoi(expect_key(in, "max_height"));
    degenerate = std::stoull(expect_key(in, "degenerate"));
    count = std::stoull(expect_key(in, "entries"));
  } catch (const std::logic_error&) {
    corrupt("malformed header number");
  }

  const std::size_t n = a.size();
  RootVector prev;
  for (std::size_t k = 0; k < count; ++k) {
    if (!std::getline(in, line)) corrupt("truncated entry list");
    std::istringstream ls(line);
    std::vector<long long> coeffs(n);
    std::string mult, num, den;
    for (auto& c : coeffs)
      if (!(ls >> c)) corrupt("bad coefficients in '" + line + "'");
    if (!(ls >> mult >> num >> den)) corrupt("bad values in '" + line + "'");
    std::string extra;
    if (ls >> extra) corrupt("trailing data in '" + line + "'");
    MultEntry e;
    RootVector v;
    try {
      v = RootVector(coeffs);
      e.mult = mpz_class(mult);
      e.c = mpq_class(mpz_class(num), mpz_class(den));
    } catch (const std::exception&) {
      corrupt("unparsable entry '" + line + "'");
    }
    e.c.canonicalize();
    if (!v.is_positive() || v.height() > max_height) corrupt("entry out of range: " + v.str());
    if (k > 0 && !(prev < v)) corrupt("entries out of order at " + v.str());
    prev = v;
    table.insert(v, e);
  }
  if (std::getline(in, line) && !line.empty()) corrupt("unexpected trailing content");
  table.set_max_height(max_height);
  table.add_degenerate(degenerate);

  // Invariant re-check: simple roots, connectivity, and c = sum mult(b/k)/k.
  for (std::size_t i = 0; i < n && max_height >= 1; ++i) {
    const auto* e = table.find(RootVector::simple(n, i));
    if (!e || e->mult != 1 || e->c != 1) corrupt("simple root entry wrong at index " + std::to_string(i + 1));
  }
  for (const auto& [v, e] : table.sorted_entries()) {
    if (!is_connected(a, v)) corrupt("disconnected vector stored: " + v.str());
    if (e.mult < 0) corrupt("negative multiplicity at " + v.str());
    mpq_class c = 0;
    const auto g = v.content();
    for (RootVector::Coeff d = 1; d <= g; ++d)
      if (g % d == 0)
        if (const auto* s = table.find(v.divided(d))) {
          mpq_class part(s->mult, d);
          part.canonicalize();
          c += part;
        }
    c.canonicalize();
    if (c != e.c) corrupt("c does not match multiplicities at " + v.str());
  }
  return table;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& id) {
  return dir / (id + ".kmc");
}

void cache_store(const std::filesystem::path& dir, const MultiplicityTable& table) {
  std::filesystem::create_directories(dir);
  const auto path = cache_path(dir, table.id());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::CorruptCache, "cannot write " + tmp.string());
    write_table(out, table);
    if (!out) throw Error(ErrorKind::CorruptCache, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::optional<MultiplicityTable> cache_load(const std::filesystem::path& dir, const CartanMatrix& a,
                                            const Symmetrizer& q) {
  const auto path = cache_path(dir, matrix_id(a, q));
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return read_table(in, a, q);
}

MultiplicityTable load_or_compute(const std::filesystem::path& dir, const CartanMatrix& a, const Symmetrizer& q,
                                  int max_height, const EngineOptions& opts) {
  if (dir.empty()) return compute_table(a, q, max_height, opts);
  auto cached = cache_load(dir, a, q);
  MultiplicityTable table = cached ? std::move(*cached) : MultiplicityTable(a, q);
  if (table.max_height() < max_height) {
    extend_table(table, max_height, opts);
    cache_store(dir, table);
  }
  return table;
}

}  // namespace kmroots
