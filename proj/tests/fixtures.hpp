#pragma once

// Shared SBN fixture documents used across the unit and acceptance suites.

#include <cstdio>
#include <filesystem>
#include <string>
#include <unistd.h>
#include <utility>
#include <vector>

namespace fixtures {

// --- alignment-error examples (wrong pipeline output and corrected form) ---

inline const std::string kDislocationWrong =
    "male.n.02 Name \"梅尔·卡玛津\" be.v.08 Theme -1 Time +1 Co-Theme +2 time.n.08 EQU now "
    "person.n.01 Role +1 executive.n.01 Of +1 company.n.01 Name \"执行官\"";
inline const std::string kDislocationCorrected =
    "male.n.02 Name \"梅尔·卡玛津\" be.v.08 Theme -1 Time +1 Co-Theme +2 time.n.08 EQU now "
    "person.n.01 Role +1 executive.n.01 Of +1 company.n.01 Name \"天狼星\"";

inline const std::string kCharExclusionWrong =
    "group.n.01 Name ? sing.v.02 Agent -1 Time +1 Theme +2 time.n.08 TPR now "
    "song.n.01 EQU +1 music.n.01 Name \"快乐一起\"";
inline const std::string kCharExclusionCorrected =
    "group.n.01 Name ? sing.v.02 Agent -1 Time +1 Theme +2 time.n.08 TPR now "
    "song.n.01 EQU +1 music.n.01 Name \"快乐在一起\"";

inline const std::string kCharInclusionWrong =
    "male.n.02 Name \"卢瑟福·海斯1822\" time.n.08 TPR now bear.v.02 Patient -2 Location +1 "
    "Time +2 state.n.01 Name \"俄亥俄州\" time.n.08 YearOfCentury 1822 TIN -3";
inline const std::string kCharInclusionCorrected =
    "male.n.02 Name \"卢瑟福·海斯\" time.n.08 TPR now bear.v.02 Patient -2 Location +1 "
    "Time +2 state.n.01 Name \"俄亥俄州\" time.n.08 YearOfCentury 1822 TIN -3";

inline const std::string kNationalityWrong =
    "person.n.01 EQU speaker NEGATION <1 time.n.08 EQU now be.v.03 Theme -2 Time -1 "
    "Source +1 country.n.02 Name \"\"";
inline const std::string kNationalityCorrected =
    "person.n.01 EQU speaker NEGATION <1 time.n.08 EQU now be.v.03 Theme -2 Time -1 "
    "Source +1 country.n.02 Name \"ireland\"";

// --- system outputs and gold standards (two documents, four parsers) ---

inline const std::string kLureEn =
    "music.n.01 NEGATION <1 person.n.01 NEGATION <1 surprise.v.02 Stimulus -2 "
    "Experiencer -1 Time +1 time.n.08 EQU now";
inline const std::string kLureZh =
    "music.n.01 NEGATION <1 person.n.01 NEGATION <1 appeal.v.01 Agent -2 Theme -1 "
    "Time +1 time.n.08 TPR now";
inline const std::string kLureZhEn = "event.v.01 Participant +1 music.n.01 appeal.v.01 Theme -1";
inline const std::string kLureGold =
    "music.n.01 NEGATION <1 person.n.01 NEGATION <1 lure.v.01 Agent -2 Patient -1 "
    "Time +1 time.n.08 TPR now";

inline const std::string kHandyEn =
    "female.n.02 time.n.08 EQU now very.r.01 handy.a.01 AttributeOf -3 Time -2 Degree -1 "
    "Instrument +1 saw.n.02";
inline const std::string kHandyZh =
    "female.n.02 time.n.08 TSU now use.v.01 Agent -2 Time -1 Theme +1 Instrument +2 "
    "entity.n.01 saw.n.02";
inline const std::string kHandyZhEn =
    "female.n.02 time.n.08 EQU now good.a.01 AttributeOf -2 Time -1 Instrument +1 saw.n.02";
inline const std::string kHandyGold =
    "female.n.02 time.n.08 EQU now very.r.01 handy.a.03 AttributeOf -3 Time -2 Degree -1 "
    "Instrument +1 saw.n.02";

// "Tom doesn't spend much time in Boston."
inline const std::string kTomBoston =
    "male.n.02 Name \"Tom\" time.n.08 EQU now NEGATION <1 spend.v.02 Agent -2 Time -1 "
    "Theme +1 Location +3 time.n.08 Quantity +1 much.a.01 city.n.01 Name \"Boston\"";

inline std::vector<std::pair<std::string, std::string>> all() {
    return {
        {"dislocation_wrong", kDislocationWrong},
        {"dislocation_corrected", kDislocationCorrected},
        {"char_exclusion_wrong", kCharExclusionWrong},
        {"char_exclusion_corrected", kCharExclusionCorrected},
        {"char_inclusion_wrong", kCharInclusionWrong},
        {"char_inclusion_corrected", kCharInclusionCorrected},
        {"nationality_wrong", kNationalityWrong},
        {"nationality_corrected", kNationalityCorrected},
        {"lure_en", kLureEn},
        {"lure_zh", kLureZh},
        {"lure_zhen", kLureZhEn},
        {"lure_gold", kLureGold},
        {"handy_en", kHandyEn},
        {"handy_zh", kHandyZh},
        {"handy_zhen", kHandyZhEn},
        {"handy_gold", kHandyGold},
        {"tom_boston", kTomBoston},
    };
}

inline std::string replace_once(std::string text, const std::string& from, const std::string& to) {
    size_t at = text.find(from);
    if (at != std::string::npos) text.replace(at, from.size(), to);
    return text;
}

// Scratch directory removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("sbntool-" + tag + "-" + std::to_string(::getpid()) + "-" +
                 std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

} // namespace fixtures
