#include "robosim/vcd.hpp"

#include <cassert>
#include <stdexcept>

namespace robosim {

VcdWriter::VcdWriter(std::ostream& out, std::string scope)
    : out_(out), scope_(std::move(scope)) {}

std::string VcdWriter::identifier(std::size_t n) {
    // printable short IDs: '!'..'~'
    std::string id;
    do {
        id.push_back(static_cast<char>('!' + n % 94));
        n /= 94;
    } while (n > 0);
    return id;
}

VcdWriter::SignalId VcdWriter::add_wire(const std::string& name) {
    if (header_written_) {
        throw std::logic_error("VcdWriter: cannot add signals after the header");
    }
    signals_.push_back({name, 1, identifier(signals_.size()), "0", ""});
    return signals_.size() - 1;
}

VcdWriter::SignalId VcdWriter::add_bus(const std::string& name, int width) {
    if (header_written_) {
        throw std::logic_error("VcdWriter: cannot add signals after the header");
    }
    if (width < 2 || width > 32) {
        throw std::logic_error("VcdWriter: bus width out of range");
    }
    signals_.push_back({name, width, identifier(signals_.size()),
                        std::string(static_cast<std::size_t>(width), 'z'), ""});
    return signals_.size() - 1;
}

void VcdWriter::write_header() {
    out_ << "$timescale 1ns $end\n";
    out_ << "$scope module " << scope_ << " $end\n";
    for (const Signal& s : signals_) {
        out_ << "$var wire " << s.width << " " << s.id << " " << s.name << " $end\n";
    }
    out_ << "$upscope $end\n";
    out_ << "$enddefinitions $end\n";
    header_written_ = true;
}

void VcdWriter::set_wire(SignalId id, bool value) {
    signals_[id].current = value ? "1" : "0";
}

void VcdWriter::set_bus(SignalId id, std::optional<std::uint32_t> value) {
    Signal& s = signals_[id];
    if (!value) {
        s.current.assign(static_cast<std::size_t>(s.width), 'z');
        return;
    }
    s.current.resize(static_cast<std::size_t>(s.width));
    for (int bit = 0; bit < s.width; ++bit) {
        s.current[static_cast<std::size_t>(s.width - 1 - bit)] =
            (*value >> bit) & 1u ? '1' : '0';
    }
}

void VcdWriter::emit(const Signal& s) {
    if (s.width == 1) {
        out_ << s.current << s.id << "\n";
    } else {
        out_ << "b" << s.current << " " << s.id << "\n";
    }
}

void VcdWriter::commit(std::int64_t t_ns) {
    assert(header_written_);
    if (!dumped_) {
        out_ << "#" << t_ns << "\n";
        out_ << "$dumpvars\n";
        for (Signal& s : signals_) {
            emit(s);
            s.written = s.current;
        }
        out_ << "$end\n";
        dumped_ = true;
        return;
    }
    bool time_written = false;
    for (Signal& s : signals_) {
        if (s.current == s.written) {
            continue;
        }
        if (!time_written) {
            out_ << "#" << t_ns << "\n";
            time_written = true;
        }
        emit(s);
        s.written = s.current;
    }
}

}  // namespace robosim
