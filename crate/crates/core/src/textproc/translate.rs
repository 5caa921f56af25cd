use thiserror::Error;

use super::RawPost;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("translation failed: {0}")]
pub struct TranslateError(pub String);

/// Maps post text into English.
pub trait Translator: Send + Sync {
    fn translate(&self, text: &str) -> Result<String, TranslateError>;
}

/// Leaves text untouched.
#[derive(Debug, Clone, Copy, Default)]
pub struct Identity;

impl Translator for Identity {
    fn translate(&self, text: &str) -> Result<String, TranslateError> {
        Ok(text.to_string())
    }
}

impl<F> Translator for F
where
    F: Fn(&str) -> Result<String, TranslateError> + Send + Sync,
{
    fn translate(&self, text: &str) -> Result<String, TranslateError> {
        self(text)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Translated {
    pub post: RawPost,
    /// Set when the translator failed and the original text was kept.
    pub warning: Option<String>,
}

pub fn translate_hook(post: RawPost, translator: &dyn Translator) -> Translated {
    match translator.translate(&post.text) {
        Ok(text) => Translated {
            post: RawPost { text, ..post },
            warning: None,
        },
        Err(e) => Translated {
            warning: Some(format!("post {}: {e}; kept original text", post.id)),
            post,
        },
    }
}
