#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace bethe::cli {

enum class OutputFormat { Csv, Json };

/// Streams one table of preformatted cells. JSON values stay strings.
class TableWriter {
public:
    virtual ~TableWriter() = default;
    virtual void row(const std::vector<std::string>& cells) = 0;
    virtual void finish() = 0;
};

std::unique_ptr<TableWriter> make_writer(OutputFormat format, std::ostream& out, std::vector<std::string> columns,
                                         nlohmann::ordered_json meta);

}  // namespace bethe::cli
