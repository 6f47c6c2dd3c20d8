#include "table_writer.hpp"

#include <stdexcept>

namespace bethe::cli {

namespace {

std::string csv_cell(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

class CsvWriter final : public TableWriter {
public:
    CsvWriter(std::ostream& out, std::vector<std::string> columns) : out_(out), width_(columns.size()) {
        write_line(columns);
    }

    void row(const std::vector<std::string>& cells) override {
        if (cells.size() != width_) throw std::logic_error("row width does not match the header");
        write_line(cells);
    }

    void finish() override { out_.flush(); }

private:
    void write_line(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out_ << ',';
            out_ << csv_cell(cells[i]);
        }
        out_ << '\n';
    }

    std::ostream& out_;
    std::size_t width_;
};

class JsonWriter final : public TableWriter {
public:
    JsonWriter(std::ostream& out, std::vector<std::string> columns, nlohmann::ordered_json meta)
        : out_(out), columns_(std::move(columns)) {
        out_ << "{\"meta\":" << meta.dump() << ",\"rows\":[";
    }

    void row(const std::vector<std::string>& cells) override {
        if (cells.size() != columns_.size()) throw std::logic_error("row width does not match the header");
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < cells.size(); ++i) obj[columns_[i]] = cells[i];
        out_ << (first_ ? "\n" : ",\n") << obj.dump();
        first_ = false;
    }

    void finish() override {
        out_ << (first_ ? "]}\n" : "\n]}\n");
        out_.flush();
    }

private:
    std::ostream& out_;
    std::vector<std::string> columns_;
    bool first_ = true;
};

}  // namespace

std::unique_ptr<TableWriter> make_writer(OutputFormat format, std::ostream& out, std::vector<std::string> columns,
                                         nlohmann::ordered_json meta) {
    if (format == OutputFormat::Csv) return std::make_unique<CsvWriter>(out, std::move(columns));
    return std::make_unique<JsonWriter>(out, std::move(columns), std::move(meta));
}

}  // namespace bethe::cli
