//! Shared fixtures for integration tests: a deterministic synthetic
//! multilingual corpus built from genuine high-frequency vocabulary of
//! six languages across four scripts. Text is generated by Zipf-weighted
//! sampling, so training and held-out material share realistic word-rank
//! and character-frequency structure without bundling megabytes of data.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rand::distributions::{Distribution, WeightedIndex};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rrc_core::{train, ClassifierModel, CorpusSpec};

pub struct SynthLang {
    pub code: &'static str,
    pub words: &'static [&'static str],
}

pub const LANGS: &[SynthLang] = &[
    SynthLang { code: "el", words: EL_WORDS },
    SynthLang { code: "en", words: EN_WORDS },
    SynthLang { code: "es", words: ES_WORDS },
    SynthLang { code: "fr", words: FR_WORDS },
    SynthLang { code: "ru", words: RU_WORDS },
    SynthLang { code: "zh", words: ZH_WORDS },
];

/// Zipf-weighted random text: sentences of 6-14 words, newline-separated,
/// at least `target_bytes` long.
pub fn generate_text(lang: &SynthLang, target_bytes: usize, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights: Vec<f64> = (0..lang.words.len())
        .map(|i| 1.0 / (i as f64 + 2.0))
        .collect();
    let dist = WeightedIndex::new(&weights).unwrap();
    let mut out = String::with_capacity(target_bytes + 256);
    while out.len() < target_bytes {
        let n = rng.gen_range(6..=14);
        for i in 0..n {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(lang.words[dist.sample(&mut rng)]);
        }
        out.push('\n');
    }
    out
}

/// Write a `<dir>/<LL>/<name>` corpus file for every language and return
/// the per-language file lists.
pub fn write_corpus(
    dir: &Path,
    target_bytes: usize,
    seed_base: u64,
) -> BTreeMap<String, Vec<PathBuf>> {
    let mut files = BTreeMap::new();
    for (i, lang) in LANGS.iter().enumerate() {
        let lang_dir = dir.join(lang.code);
        fs::create_dir_all(&lang_dir).unwrap();
        let path = lang_dir.join("sample.txt");
        fs::write(
            &path,
            generate_text(lang, target_bytes, seed_base + i as u64),
        )
        .unwrap();
        files.insert(lang.code.to_string(), vec![path]);
    }
    files
}

pub struct DeskScale {
    pub model: ClassifierModel,
    /// (true language, chunk text) over the held-out split, target size 256.
    pub test_files: BTreeMap<String, Vec<PathBuf>>,
    _train_dir: tempfile::TempDir,
    _test_dir: tempfile::TempDir,
}

/// Train on ~150 KB per language and hold out ~60 KB per language from a
/// disjoint generator stream.
pub fn desk_scale() -> DeskScale {
    let train_dir = tempfile::tempdir().unwrap();
    let test_dir = tempfile::tempdir().unwrap();
    let train_files = write_corpus(train_dir.path(), 150 * 1024, 0x5eed_0000);
    let test_files = write_corpus(test_dir.path(), 60 * 1024, 0x7e57_0000);
    let model = train(&CorpusSpec::new(train_files)).unwrap();
    DeskScale {
        model,
        test_files,
        _train_dir: train_dir,
        _test_dir: test_dir,
    }
}

const EN_WORDS: &[&str] = &[
    "the", "of", "and", "to", "a", "in", "is", "was", "for", "as", "on", "with", "that", "by",
    "at", "from", "it", "his", "he", "this", "are", "be", "an", "or", "which", "you", "not",
    "we", "have", "has", "had", "they", "their", "but", "were", "all", "its", "one", "also",
    "can", "will", "about", "more", "when", "who", "what", "there", "been", "if", "out", "up",
    "so", "no", "time", "people", "year", "new", "some", "would", "like", "them", "than",
    "other", "into", "only", "over", "after", "first", "two", "her", "she", "him", "my", "me",
    "your", "our", "us", "now", "here", "thanks", "yes", "please", "good", "day", "work",
    "world", "very", "just", "well", "how", "where", "why", "because", "before", "many",
    "most", "made", "may", "between", "during", "each",
];

const ES_WORDS: &[&str] = &[
    "de", "la", "el", "en", "y", "a", "que", "los", "se", "del", "las", "un", "por", "con",
    "una", "su", "para", "es", "al", "lo", "como", "más", "o", "pero", "sus", "le", "ha",
    "me", "si", "sin", "sobre", "este", "ya", "entre", "cuando", "todo", "esta", "ser",
    "son", "dos", "también", "fue", "había", "era", "muy", "años", "hasta", "desde", "está",
    "mi", "porque", "qué", "sólo", "han", "yo", "hay", "vez", "puede", "todos", "así", "nos",
    "ni", "parte", "tiene", "él", "uno", "donde", "bien", "tiempo", "mismo", "ese", "ahora",
    "cada", "e", "vida", "otro", "después", "te", "otros", "aunque", "esa", "eso", "hace",
    "otra", "gobierno", "tan", "durante", "siempre", "día", "tanto", "ella", "tres", "sí",
    "dijo", "sido", "gran", "país", "según", "menos", "gracias",
];

const FR_WORDS: &[&str] = &[
    "de", "la", "le", "et", "les", "des", "en", "un", "du", "une", "que", "est", "pour",
    "qui", "dans", "a", "par", "plus", "pas", "au", "sur", "ne", "se", "ce", "il", "sont",
    "aux", "avec", "son", "été", "comme", "même", "ont", "mais", "ou", "si", "leur", "y",
    "dont", "elle", "deux", "aussi", "cette", "ses", "fait", "plusieurs", "sa", "être",
    "peut", "tout", "après", "sans", "autres", "on", "lui", "nous", "vous", "je", "tu",
    "bonjour", "merci", "oui", "non", "bien", "très", "votre", "notre", "ans", "entre",
    "première", "toutes", "autre", "où", "depuis", "sous", "ville", "premier", "pendant",
    "ainsi", "temps", "partie", "années", "trois", "encore", "leurs", "toujours", "alors",
    "moins", "monde", "france", "contre", "quelques", "toute", "fois", "jour", "était",
    "avait", "peu",
];

const RU_WORDS: &[&str] = &[
    "и", "в", "не", "на", "я", "быть", "он", "с", "что", "а", "по", "это", "она", "этот",
    "к", "но", "они", "мы", "как", "из", "у", "который", "то", "за", "свой", "весь", "год",
    "от", "так", "о", "для", "ты", "же", "все", "тот", "мочь", "вы", "человек", "такой",
    "его", "сказать", "только", "или", "ещё", "бы", "себя", "один", "уже", "до", "время",
    "если", "сам", "когда", "другой", "вот", "говорить", "наш", "мой", "знать", "стать",
    "при", "чтобы", "дело", "жизнь", "кто", "первый", "очень", "два", "день", "её", "рука",
    "даже", "во", "со", "раз", "где", "там", "под", "можно", "ну", "какой", "после", "их",
    "работа", "без", "самый", "потом", "надо", "хотеть", "ли", "слово", "идти", "большой",
    "должен", "место", "иметь", "ничего", "спасибо", "да", "нет", "привет",
];

const EL_WORDS: &[&str] = &[
    "και", "το", "να", "του", "η", "της", "θα", "με", "ο", "από", "για", "στο", "που",
    "είναι", "τα", "την", "τον", "οι", "δεν", "τη", "σε", "ότι", "τους", "στη", "στην",
    "μου", "αυτό", "τις", "ως", "στις", "αλλά", "ένα", "κατά", "μια", "τι", "μας", "είχε",
    "ήταν", "πολύ", "δύο", "όπως", "μετά", "χρόνια", "μέχρι", "πριν", "μεταξύ", "επίσης",
    "ευχαριστώ", "ναι", "όχι", "καλά", "σου", "εγώ", "εσύ", "αυτός", "αυτή", "κάθε",
    "όταν", "τώρα", "εδώ", "εκεί", "πώς", "γιατί", "ακόμη", "μόνο", "πρώτη", "μεγάλη",
    "νέα", "ελλάδα", "πόλη", "μέρα", "ζωή", "κόσμος", "άνθρωπος", "χώρα", "νερό", "σπίτι",
    "παιδί", "γυναίκα", "άνδρας", "φορά", "μέρος", "λόγο", "θέμα", "τέλος", "αρχή", "ώρα",
    "ημέρα", "εθνική", "περιοχή", "ιστορία", "γλώσσα", "σύστημα", "κυβέρνηση", "εταιρεία",
    "ομάδα", "παιχνίδι", "μουσική", "ταινία", "βιβλίο",
];

const ZH_WORDS: &[&str] = &[
    "的", "一", "是", "在", "不", "了", "有", "和", "人", "这", "中", "大", "为", "上",
    "个", "国", "我", "以", "要", "他", "时", "来", "用", "们", "生", "到", "作", "地",
    "于", "出", "就", "分", "对", "成", "会", "可", "主", "发", "年", "动", "同", "工",
    "也", "能", "下", "过", "子", "说", "产", "种", "面", "而", "方", "后", "多", "定",
    "行", "学", "法", "所", "民", "得", "经", "十", "三", "之", "进", "着", "等", "部",
    "度", "家", "电", "力", "里", "如", "水", "化", "高", "自", "二", "理", "起", "小",
    "物", "现", "实", "加", "量", "都", "两", "体", "制", "机", "当", "使", "点", "从",
    "业", "本", "谢谢", "你好", "中国", "我们", "可以", "什么", "没有", "知道", "现在",
    "时间",
];
