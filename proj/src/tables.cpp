#include "qtm/tables.hpp"

#include <sstream>

#include <json.hpp>

#include "qtm/errors.hpp"

namespace qtm {

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw InputError("unknown output format: " + name);
}

std::string format_rows(const std::vector<DistRow>& rows, OutputFormat fmt,
                        bool q_suffix) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Text: {
      os << "Dist\tPositions\tUnique wrt M\tUnique wrt M+inv\n";
      for (const DistRow& r : rows) {
        os << r.dist;
        if (q_suffix) os << 'q';
        os << '\t' << r.positions << '\t' << r.classes_m << '\t'
           << r.classes_minv << '\n';
      }
      break;
    }
    case OutputFormat::Csv: {
      os << "dist,positions,unique_wrt_m,unique_wrt_m_inv\n";
      for (const DistRow& r : rows)
        os << r.dist << ',' << r.positions << ',' << r.classes_m << ','
           << r.classes_minv << '\n';
      break;
    }
    case OutputFormat::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const DistRow& r : rows)
        arr.push_back({{"dist", r.dist},
                       {"positions", r.positions},
                       {"unique_wrt_m", r.classes_m},
                       {"unique_wrt_m_inv", r.classes_minv}});
      os << arr.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace qtm
