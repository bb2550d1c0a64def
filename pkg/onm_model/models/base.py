from sqlalchemy.orm import declarative_base

# report_entries and reports share this Base
Base = declarative_base()
