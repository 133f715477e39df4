#include "pocfrob/census.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include <json.hpp>

#include "pocfrob/realize.hpp"

namespace pocfrob {

namespace {

CensusRow make_row(u64 p, u32 k, u32 r, const ComplementSpec& c, Justification family) {
  CensusRow row;
  row.kernel = HomocyclicKernel{p, k, r};
  row.complement = c;
  row.order = row.kernel.order() * c.order();
  row.family = family;
  row.structure = row.kernel.text() + ":" + c.text();
  return row;
}

// Existence filter for non-abelian candidates: a fixed-point-free embedding
// in GL(r, p). Cached per (complement, r, p).
bool realizable_fpf(const ComplementSpec& c, u32 r, u64 p) {
  static std::mutex mu;
  static std::map<std::string, bool> cache;
  const std::string key = c.text() + "@" + std::to_string(r) + "," + std::to_string(p);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  bool ok = false;
  if (auto act = realize_complement(c, r, p)) ok = is_fixed_point_free(*act);
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = ok;
  return ok;
}

}  // namespace

std::vector<CensusRow> census_enumerate(u64 max_order) {
  std::vector<CensusRow> rows;

  // rank-1 kernels with cyclic complement of order p - 1
  for (const auto& [p, k] : pierpont_family_params(max_order)) {
    rows.push_back(make_row(p, k, 1, ComplementSpec::cyclic(p - 1), Justification::ThmC));
  }

  // rank-2 kernels with cyclic complement of order p^2 - 1
  for (const auto& [p, n] : {std::pair<u64, u64>{3, 8}, {5, 24}, {7, 48}, {17, 288}}) {
    u64 kern = p * p;
    for (u32 k = 1; kern <= max_order / n; ++k) {
      rows.push_back(make_row(p, k, 2, ComplementSpec::cyclic(n), Justification::ThmC));
      if (kern > max_order / (p * p)) break;
      kern *= p * p;
    }
  }

  // biprimary non-nilpotent families
  struct DForm {
    u64 p;
    u32 r;
    ComplementSpec c;
  };
  const DForm dforms[] = {
      {5, 2, ComplementSpec::sl2_3()},
      {5, 2, ComplementSpec::metacyclic(3, 8, 2)},
      {7, 2, ComplementSpec::metacyclic(3, 16, 2)},
      {17, 2, ComplementSpec::metacyclic(9, 32, 8)},
      {3, 4, ComplementSpec::metacyclic(5, 16, 4)},
  };
  for (const auto& f : dforms) {
    const u64 h = f.c.order();
    const u64 step = ipow(f.p, f.r);
    u64 kern = step;
    for (u32 k = 1; kern <= max_order / h; ++k) {
      if (!realizable_fpf(f.c, f.r, f.p)) break;
      rows.push_back(make_row(f.p, k, f.r, f.c, Justification::ThmD));
      if (kern > max_order / step) break;
      kern *= step;
    }
  }

  // insoluble family
  {
    u64 kern = 121;
    for (u32 k = 1; kern <= max_order / 120; ++k) {
      if (!realizable_fpf(ComplementSpec::sl2_5(), 2, 11)) break;
      rows.push_back(make_row(11, k, 2, ComplementSpec::sl2_5(), Justification::ThmB));
      if (kern > max_order / 121) break;
      kern *= 121;
    }
  }

  std::sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
    return std::tie(a.order, a.structure) < std::tie(b.order, b.structure);
  });
  return rows;
}

std::vector<CrosscheckEntry> census_crosscheck(const std::vector<CensusRow>& rows, u64 limit) {
  std::vector<CrosscheckEntry> report;
  for (const CensusRow& row : rows) {
    if (row.order > limit) continue;
    CrosscheckEntry e;
    e.row = row;
    try {
      auto act = realize_complement(row.complement, row.kernel.r, row.kernel.p);
      if (!act) {
        e.message = "no embedding in GL(" + std::to_string(row.kernel.r) + "," +
                    std::to_string(row.kernel.p) + ")";
        report.push_back(e);
        continue;
      }
      const MatrixAction lifted = lift_action(*act, row.kernel.k);
      e.realized = true;
      e.fpf = is_fixed_point_free(lifted);
      if (!e.fpf) {
        e.message = "action is not fixed-point-free";
        report.push_back(e);
        continue;
      }
      const ConcreteGroup g = semidirect_product(row.kernel, lifted, std::max(limit, row.order));
      const OrderCensus brute = order_census_bruteforce(g, std::max(limit, row.order));
      const OrderCensus symbolic = frobenius_census(
          homocyclic_census(row.kernel.p, row.kernel.k, row.kernel.r),
          complement_census(row.complement));
      e.census_match = brute == symbolic;
      e.poc = is_poc(brute);
      if (!e.census_match) e.message = "brute-force census differs from the symbolic census";
      if (!e.poc) e.message += std::string(e.message.empty() ? "" : "; ") + "census is not POC";
    } catch (const std::exception& ex) {
      e.message = ex.what();
    }
    report.push_back(e);
  }
  return report;
}

std::string census_render(const std::vector<CensusRow>& rows, RenderFormat format) {
  switch (format) {
    case RenderFormat::Tsv: {
      std::string out;
      for (const CensusRow& r : rows) {
        out += std::to_string(r.order) + "\t" + r.kernel.text() + "\t" + r.complement.text() +
               "\t" + tag_name(r.family) + "\t" + r.structure + "\n";
      }
      return out;
    }
    case RenderFormat::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const CensusRow& r : rows) {
        arr.push_back({{"order", r.order},
                       {"kernel", r.kernel.text()},
                       {"complement", r.complement.text()},
                       {"family", tag_name(r.family)},
                       {"structure", r.structure}});
      }
      return arr.dump(2) + "\n";
    }
    case RenderFormat::Markdown: {
      auto section = [&](const std::string& title, auto pred) {
        std::string s = "## " + title + "\n\n";
        s += "| order | kernel | complement | family | structure |\n";
        s += "|------:|--------|------------|--------|-----------|\n";
        for (const CensusRow& r : rows) {
          if (!pred(r)) continue;
          s += "| " + std::to_string(r.order) + " | " + r.kernel.text() + " | " +
               r.complement.text() + " | " + tag_name(r.family) + " | " + r.structure + " |\n";
        }
        return s + "\n";
      };
      auto is_cyclic2 = [](const CensusRow& r) {
        return r.complement.kind == ComplementSpec::Kind::Cyclic &&
               (r.complement.n & (r.complement.n - 1)) == 0;
      };
      auto is_cyclic_other = [&](const CensusRow& r) {
        return r.complement.kind == ComplementSpec::Kind::Cyclic && !is_cyclic2(r);
      };
      auto is_nonabelian = [](const CensusRow& r) {
        return r.complement.kind != ComplementSpec::Kind::Cyclic;
      };
      std::string out = "# Frobenius groups with perfect order classes\n\n";
      out += "Rows come from the classified complement families; complements that are\n";
      out += "soluble with three or more odd prime divisors outside {2,3,5} are not\n";
      out += "classified, and no such group exists up to order 15000.\n\n";
      out += section("Cyclic 2-group complement", is_cyclic2);
      out += section("Cyclic {2,3}-complement, not a 2-group", is_cyclic_other);
      out += section("Non-abelian complement", is_nonabelian);
      return out;
    }
  }
  throw std::logic_error("census_render: unreachable");
}

}  // namespace pocfrob
